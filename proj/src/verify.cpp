#include "enum2c/verify.hpp"

#include <algorithm>
#include <sstream>

#include "enum2c/bruteforce.hpp"
#include "enum2c/connectivity.hpp"
#include "enum2c/mrs.hpp"

namespace enum2c::verify {

namespace {

std::string list_str(const std::vector<int>& v) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << '}';
    return out.str();
}

std::string family_str(const std::vector<VertexList>& f) {
    std::ostringstream out;
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << list_str(f[i]);
    return out.str();
}

Failure fail(const Graph& g, std::string check, std::string detail) {
    return Failure{std::move(check), std::move(detail), serialize_graph(g)};
}

std::vector<VertexList> sorted_family(std::vector<VertexList> f) {
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

void StatsAgg::absorb(const EngineStats& st, int n) {
    iter_gap_max = std::max(iter_gap_max, st.iter_gap_max);
    oracle_gap_max = std::max(oracle_gap_max, st.oracle_gap_max);
    ops_max = std::max(ops_max, st.ops_max);
    if (st.peak_x > n || st.peak_seq > n || st.peak_idx > n || st.peak_depth > n)
        space_ok = false;
    ++runs;
}

Report check_enumeration(const Graph& g, Mode mode, StatsAgg* agg) {
    const int n = g.num_vertices();
    const std::string tag = std::string("enumeration/") + mode_name(mode);

    std::vector<DiffRecord> records;
    EngineStats st;
    EngineOptions opt;
    opt.validate = true;
    try {
        enumerate_all(g, mode, [&](const DiffRecord& r) {
            records.push_back(r);
            return true;
        }, &st, opt);
    } catch (const std::exception& e) {
        return fail(g, tag, std::string("engine threw: ") + e.what());
    }
    if (agg) agg->absorb(st, n);

    // structural bounds per record / between records
    if (st.iter_gap_max > 4 || st.oracle_gap_max > 4)
        return fail(g, tag,
                    "gap bound exceeded: iters=" + std::to_string(st.iter_gap_max) +
                        " oracle=" + std::to_string(st.oracle_gap_max));
    if (st.ops_max > 3)
        return fail(g, tag, "record with " + std::to_string(st.ops_max) + " ops");
    if (st.peak_x > n || st.peak_seq > n || st.peak_idx > n || st.peak_depth > n)
        return fail(g, tag, "stack peak above n");

    // only root records may carry a full set, and each stream starts with one
    bool expect_root = true;
    for (const auto& r : records) {
        if (expect_root && !r.is_root())
            return fail(g, tag, "stream does not open with a full record");
        if (!expect_root && r.is_root() && !r.ops.empty())
            return fail(g, tag, "full record carries ops");
        expect_root = false;
    }

    std::vector<VertexList> streamed;
    try {
        streamed = reconstruct(records);
    } catch (const std::exception& e) {
        return fail(g, tag, std::string("reconstruct failed: ") + e.what());
    }

    auto sorted_streamed = sorted_family(streamed);
    for (std::size_t i = 1; i < sorted_streamed.size(); ++i)
        if (sorted_streamed[i] == sorted_streamed[i - 1])
            return fail(g, tag, "duplicate component " + list_str(sorted_streamed[i]));

    auto expected = brute::components(g, mode);
    if (sorted_streamed != expected)
        return fail(g, tag,
                    "reconstruction != brute force\n  streamed: " + family_str(sorted_streamed) +
                        "\n  expected: " + family_str(expected));

    // recursive reference agreement, root by root
    std::vector<VertexList> recursed;
    Oracle oracle = make_oracle(g, mode);
    for (const auto& root : enumeration_roots(g, mode)) {
        VertexSet rs = VertexSet::of(n, root);
        VertexSet none(n);
        enumerate_recursive(rs, none, oracle, [&](const VertexList& comp) {
            recursed.push_back(comp);
            return true;
        });
    }
    if (sorted_family(recursed) != expected)
        return fail(g, tag, "recursive enumerator disagrees with brute force");

    return std::nullopt;
}

Report check_oracle_equality(const Graph& g, Mode mode) {
    const int n = g.num_vertices();
    const std::string tag = std::string("oracle-equality/") + mode_name(mode);
    const VertexSet none(n);
    brute::MaskGraph mg(g);
    auto table = brute::predicate_table(mg, mode);
    for (std::uint32_t m = 1; m < table.size(); ++m) {
        if (!table[m]) continue;
        VertexList comp;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) comp.push_back(v);
        VertexSet c = VertexSet::of(n, comp);
        std::vector<Candidate> got =
            mode == Mode::edge ? e_mrs_all(g, c, none) : v_mrs_all(g, c, none);
        std::vector<VertexList> got_sets;
        got_sets.reserve(got.size());
        for (const auto& cd : got) got_sets.push_back(cd.sorted_vertices());
        std::sort(got_sets.begin(), got_sets.end());
        auto expected = brute::mrs_family_cached(table, m);
        if (got_sets != expected)
            return fail(g, tag,
                        "component " + list_str(comp) + "\n  oracle: " + family_str(got_sets) +
                            "\n  brute:  " + family_str(expected));
    }
    return std::nullopt;
}

Report check_sd(const Graph& g, Mode mode) {
    if (!brute::sd_property(g, mode))
        return fail(g, std::string("subset-disjoint/") + mode_name(mode),
                    "nested component pair violates subset-disjointness");
    return std::nullopt;
}

std::vector<Graph> exhaustive_connected(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t m = 0; m < total; ++m) {
        Graph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (m >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
        if (n > 0 && !is_connected(g, VertexSet::full(n))) continue;
        out.push_back(std::move(g));
    }
    return out;
}

Report run_suite(const SuiteOptions& opt) {
    if (opt.n_max < 2 || opt.n_max > 12)
        throw std::invalid_argument("run_suite: n_max must be in [2,12]");

    std::vector<Graph> graphs;
    for (int n = 1; n <= std::min(opt.n_max, 5); ++n)
        for (auto& g : exhaustive_connected(n)) graphs.push_back(std::move(g));
    const std::size_t exhaustive_count = graphs.size();

    const double ps[3] = {0.3, 0.5, 0.8};
    for (int t = 0; t < opt.trials; ++t) {
        int n = 3 + t % std::max(1, opt.n_max - 2);
        double p = ps[t % 3];
        graphs.push_back(random_graph(n, p, opt.seed * 7919 + t));
    }
    if (opt.log)
        *opt.log << "verify: " << exhaustive_count << " exhaustive + "
                 << (graphs.size() - exhaustive_count) << " random graphs\n";

    Report first;
    long long first_idx = -1;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
        if (first_idx >= 0 && first_idx < i) continue;
        const Graph& g = graphs[i];
        Report r;
        for (Mode mode : {Mode::edge, Mode::vertex}) {
            if (!r) r = check_enumeration(g, mode);
            if (!r && g.num_vertices() <= 10) r = check_oracle_equality(g, mode);
            if (!r && g.num_vertices() <= 9) r = check_sd(g, mode);
            if (r) break;
        }
        if (r) {
#pragma omp critical
            if (first_idx < 0 || i < first_idx) {
                first_idx = i;
                first = r;
            }
        }
    }
    if (opt.log && !first) *opt.log << "verify: all checks passed\n";
    return first;
}

}  // namespace enum2c::verify
