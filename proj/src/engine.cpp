#include "enum2c/engine.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "enum2c/connectivity.hpp"
#include "enum2c/mrs.hpp"

namespace enum2c {

void EngineStats::merge(const EngineStats& o) {
    records += o.records;
    loop_iterations += o.loop_iterations;
    oracle_calls += o.oracle_calls;
    gap_samples += o.gap_samples;
    iter_gap_sum += o.iter_gap_sum;
    iter_gap_max = std::max(iter_gap_max, o.iter_gap_max);
    oracle_gap_sum += o.oracle_gap_sum;
    oracle_gap_max = std::max(oracle_gap_max, o.oracle_gap_max);
    ops_max = std::max(ops_max, o.ops_max);
    peak_x = std::max(peak_x, o.peak_x);
    peak_seq = std::max(peak_seq, o.peak_seq);
    peak_idx = std::max(peak_idx, o.peak_idx);
    peak_depth = std::max(peak_depth, o.peak_depth);
    delay_sum_ns += o.delay_sum_ns;
    delay_max_ns = std::max(delay_max_ns, o.delay_max_ns);
}

namespace {

void check_oracle_result(const VertexSet& cur, const VertexSet& x, const VertexList& y) {
    if (y.empty()) throw OracleError("oracle returned an empty set");
    for (int v : y) {
        if (v < 0 || v >= cur.universe() || !cur.contains(v))
            throw OracleError("oracle returned vertex " + std::to_string(v) +
                              " outside the component");
        if (x.contains(v))
            throw OracleError("oracle returned vertex " + std::to_string(v) +
                              " from the forbidden set");
    }
}

VertexList sorted_copy(const VertexList& v) {
    VertexList out = v;
    std::sort(out.begin(), out.end());
    return out;
}

struct RecCtx {
    const Oracle& oracle;
    const ComponentSink& sink;
    VertexSet cur;
    VertexSet x;
};

bool rec_list(RecCtx& ctx) {
    if (!ctx.sink(ctx.cur.sorted_members())) return false;
    const int base = ctx.x.size();
    for (;;) {
        auto y = ctx.oracle(ctx.cur, ctx.x);
        if (!y) break;
        check_oracle_result(ctx.cur, ctx.x, *y);
        for (int v : *y) ctx.cur.remove(v);
        if (!rec_list(ctx)) return false;
        for (int v : *y) ctx.cur.add(v);
        for (int v : *y) ctx.x.add(v);
    }
    ctx.x.truncate(base);
    return true;
}

}  // namespace

bool enumerate_recursive(const VertexSet& root, const VertexSet& include, const Oracle& oracle,
                         const ComponentSink& sink) {
    RecCtx ctx{oracle, sink, root, include};
    return rec_list(ctx);
}

bool enumerate_stream(const VertexSet& root, const Oracle& oracle, const RecordSink& sink,
                      EngineStats* stats, const EngineOptions& opt) {
    using clock = std::chrono::steady_clock;
    if (root.empty()) throw std::invalid_argument("enumerate_stream: empty root");
    const int n = root.universe();

    VertexSet cur = root;            // current component
    VertexSet x(n);                  // forbidden set, stack discipline
    std::vector<VertexList> seq;     // removal sequence back to the root
    long long seq_verts = 0;
    std::vector<int> idx;            // saved x sizes, one per depth
    idx.push_back(0);
    int depth = 1;
    bool advancing = true;

    DiffRecord pending;
    pending.full = root.sorted_members();

    EngineStats st;
    st.timing = stats && stats->timing;
    long long iters_since = 0, calls_since = 0;
    long long emitted_in_stream = 0;
    clock::time_point last_emit{};

    auto note_peaks = [&] {
        st.peak_x = std::max(st.peak_x, static_cast<long long>(x.size()));
        st.peak_seq = std::max(st.peak_seq, seq_verts);
        st.peak_idx = std::max(st.peak_idx, static_cast<long long>(idx.size()));
        st.peak_depth = std::max(st.peak_depth, static_cast<long long>(depth));
    };
    auto flush = [&]() -> bool {
        st.ops_max = std::max(st.ops_max, static_cast<long long>(pending.ops.size()));
        if (emitted_in_stream > 0) {
            ++st.gap_samples;
            st.iter_gap_sum += iters_since;
            st.iter_gap_max = std::max(st.iter_gap_max, iters_since);
            st.oracle_gap_sum += calls_since;
            st.oracle_gap_max = std::max(st.oracle_gap_max, calls_since);
            if (st.timing) {
                auto now = clock::now();
                long long ns =
                    std::chrono::duration_cast<std::chrono::nanoseconds>(now - last_emit).count();
                st.delay_sum_ns += ns;
                st.delay_max_ns = std::max(st.delay_max_ns, ns);
                last_emit = now;
            }
        } else if (st.timing) {
            last_emit = clock::now();
        }
        ++st.records;
        ++emitted_in_stream;
        iters_since = 0;
        calls_since = 0;
        bool keep_going = sink(pending);
        pending = DiffRecord{};
        return keep_going;
    };
    auto self_check = [&] {
        if (x.size() > cur.size() || static_cast<int>(idx.size()) != depth)
            throw std::logic_error("engine invariant violated: stack shape");
        for (int v : x.members())
            if (!cur.contains(v)) throw std::logic_error("engine invariant violated: x not in C'");
        // replaying seq onto cur must tile the root exactly
        std::vector<char> seen(n, 0);
        long long total = cur.size();
        for (int v : cur.members()) seen[v] = 1;
        for (const auto& y : seq)
            for (int v : y) {
                if (seen[v] || !root.contains(v))
                    throw std::logic_error("engine invariant violated: seq replay");
                seen[v] = 1;
                ++total;
            }
        if (total != root.size()) throw std::logic_error("engine invariant violated: seq replay");
    };

    bool stopped = false;
    while (depth != 0) {
        ++st.loop_iterations;
        ++iters_since;
        note_peaks();
        if (opt.validate) self_check();

        if ((depth & 1) && advancing) {
            if (!flush()) {
                stopped = true;
                break;
            }
        }

        ++st.oracle_calls;
        ++calls_since;
        auto y = oracle(cur, x);
        if (y) {
            check_oracle_result(cur, x, *y);
            pending.ops.push_back({'-', sorted_copy(*y)});
            for (int v : *y) cur.remove(v);
            seq_verts += static_cast<long long>(y->size());
            seq.push_back(std::move(*y));
            idx.push_back(x.size());
            ++depth;
            advancing = true;
            note_peaks();
        } else {
            if ((depth & 1) == 0) {
                if (!flush()) {
                    stopped = true;
                    break;
                }
            }
            if (depth == 1) break;  // root exhausted
            const VertexList& back = seq.back();
            for (int v : back) cur.add(v);
            x.truncate(idx.back());
            idx.pop_back();
            pending.ops.push_back({'+', sorted_copy(back)});
            for (int v : back) x.add(v);
            note_peaks();
            seq_verts -= static_cast<long long>(back.size());
            seq.pop_back();
            --depth;
            advancing = false;
        }
    }

    if (stats) stats->merge(st);
    return !stopped;
}

std::vector<VertexList> reconstruct(const std::vector<DiffRecord>& records) {
    std::vector<VertexList> out;
    std::set<int> cur;
    bool have_base = false;
    for (const auto& r : records) {
        if (r.is_root()) {
            if (!r.ops.empty()) throw StreamError("root record carries ops");
            cur.clear();
            for (int v : r.full)
                if (!cur.insert(v).second) throw StreamError("duplicate vertex in root record");
            have_base = true;
        } else {
            if (!have_base) throw StreamError("stream does not start with a full record");
            for (const auto& op : r.ops) {
                for (int v : op.vertices) {
                    if (op.sign == '+') {
                        if (!cur.insert(v).second)
                            throw StreamError("op adds vertex " + std::to_string(v) +
                                              " already present");
                    } else if (op.sign == '-') {
                        if (cur.erase(v) == 0)
                            throw StreamError("op removes vertex " + std::to_string(v) +
                                              " not present");
                    } else {
                        throw StreamError("unknown op sign");
                    }
                }
            }
        }
        out.emplace_back(cur.begin(), cur.end());
    }
    return out;
}

std::vector<VertexList> enumeration_roots(const Graph& g, Mode mode) {
    return mode == Mode::edge ? maximal_e_components(g) : maximal_v_components(g);
}

Oracle make_oracle(const Graph& g, Mode mode) {
    if (mode == Mode::edge)
        return [&g](const VertexSet& c, const VertexSet& x) -> std::optional<VertexList> {
            auto cd = compute_mrs_e(g, c, x);
            if (!cd) return std::nullopt;
            return cd->sorted_vertices();
        };
    return [&g](const VertexSet& c, const VertexSet& x) -> std::optional<VertexList> {
        auto cd = compute_mrs_v(g, c, x);
        if (!cd) return std::nullopt;
        return cd->sorted_vertices();
    };
}

bool enumerate_all(const Graph& g, Mode mode, const RecordSink& sink, EngineStats* stats,
                   const EngineOptions& opt) {
    Oracle oracle = make_oracle(g, mode);
    for (const auto& root : enumeration_roots(g, mode)) {
        VertexSet rs = VertexSet::of(g.num_vertices(), root);
        if (!enumerate_stream(rs, oracle, sink, stats, opt)) return false;
    }
    return true;
}

}  // namespace enum2c
