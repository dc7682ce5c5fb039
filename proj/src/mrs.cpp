#include "enum2c/mrs.hpp"

#include <algorithm>

namespace enum2c {

int Candidate::min_vertex() const {
    return *std::min_element(vertices.begin(), vertices.end());
}

std::vector<int> Candidate::sorted_vertices() const {
    std::vector<int> out = vertices;
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Stable orientation so equal candidates compare equal byte for byte.
void canonicalize(Candidate& cd) {
    if (cd.vertices.size() > 1 && cd.vertices.front() > cd.vertices.back()) {
        std::reverse(cd.vertices.begin(), cd.vertices.end());
        std::swap(cd.boundary[0], cd.boundary[1]);
    } else if (cd.vertices.size() == 1 && cd.boundary[0] > cd.boundary[1]) {
        std::swap(cd.boundary[0], cd.boundary[1]);
    }
}

int other_neighbor(const Graph& g, const VertexSet& c, int cur, int prev) {
    for (int w : g.neighbors(cur))
        if (w != prev && c.contains(w)) return w;
    return -1;
}

}  // namespace

std::vector<Candidate> candidates(const Graph& g, const VertexSet& c) {
    const std::vector<int> verts = c.sorted_members();
    std::vector<int> deg(c.size());
    for (int v : verts) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (c.contains(w)) ++d;
        if (d <= 1)
            throw std::invalid_argument("candidates: vertex " + std::to_string(v) +
                                        " has induced degree " + std::to_string(d));
        deg[c.position_of(v)] = d;
    }

    std::vector<char> on_path(c.size(), 0);
    std::vector<Candidate> out;
    for (int v : verts) {
        if (deg[c.position_of(v)] > 2) {
            Candidate cd;
            cd.kind = Candidate::Kind::high_deg;
            cd.vertices = {v};
            out.push_back(std::move(cd));
            continue;
        }
        if (on_path[c.position_of(v)]) continue;

        // Grow the maximal run of degree-2 vertices through v.  A walk that
        // returns to an already-collected vertex wrapped a full cycle.
        on_path[c.position_of(v)] = 1;
        auto walk = [&](int first) -> std::pair<std::vector<int>, int> {
            std::vector<int> run;
            int prev = v, cur = first;
            for (;;) {
                if (deg[c.position_of(cur)] > 2) return {run, cur};
                if (on_path[c.position_of(cur)]) return {run, -1};
                run.push_back(cur);
                on_path[c.position_of(cur)] = 1;
                int nxt = other_neighbor(g, c, cur, prev);
                prev = cur;
                cur = nxt;
            }
        };
        int a = -1, b = -1;
        for (int w : g.neighbors(v)) {
            if (!c.contains(w)) continue;
            (a < 0 ? a : b) = w;
        }
        auto [run_a, bnd_a] = walk(a);
        Candidate cd;
        cd.kind = Candidate::Kind::two_deg_path;
        if (bnd_a == -1) {
            // whole component is one cycle
            cd.vertices.push_back(v);
            cd.vertices.insert(cd.vertices.end(), run_a.begin(), run_a.end());
        } else {
            auto [run_b, bnd_b] = walk(b);
            cd.vertices.assign(run_b.rbegin(), run_b.rend());
            cd.vertices.push_back(v);
            cd.vertices.insert(cd.vertices.end(), run_a.begin(), run_a.end());
            cd.boundary = {bnd_b, bnd_a};
        }
        canonicalize(cd);
        out.push_back(std::move(cd));
    }
    return out;
}

bool is_cycle(const Graph& g, const VertexSet& c) {
    if (c.empty()) return false;
    for (int v : c.members()) {
        int d = 0;
        for (int w : g.neighbors(v))
            if (c.contains(w)) ++d;
        if (d != 2) return false;
    }
    return is_connected(g, c);
}

AuxGraph build_aux_graph(const Graph& g, const VertexSet& c) {
    AuxGraph a;
    a.cands = candidates(g, c);

    std::vector<int> hid_of_pos(c.size(), -1);
    int nh = 0;
    a.h_of_cand.assign(a.cands.size(), -1);
    for (int ci = 0; ci < static_cast<int>(a.cands.size()); ++ci) {
        if (a.cands[ci].kind != Candidate::Kind::high_deg) continue;
        int v = a.cands[ci].vertices[0];
        hid_of_pos[c.position_of(v)] = nh;
        a.h_of_cand[ci] = nh++;
    }
    const int num_ordinary = nh;
    if (num_ordinary == 0)
        throw std::invalid_argument("build_aux_graph: component is a cycle");
    for (int ci = 0; ci < static_cast<int>(a.cands.size()); ++ci)
        if (a.cands[ci].kind == Candidate::Kind::two_deg_path) a.h_of_cand[ci] = nh++;

    // Edges joining two high-degree vertices each get one subdividing vertex.
    std::vector<std::pair<int, int>> high_edges;
    for (int u : c.sorted_members()) {
        if (hid_of_pos[c.position_of(u)] < 0) continue;
        for (int w : g.neighbors(u))
            if (w > u && c.contains(w) && hid_of_pos[c.position_of(w)] >= 0)
                high_edges.emplace_back(u, w);
    }

    const int total = nh + static_cast<int>(high_edges.size());
    a.h = Graph(total);
    a.cls.assign(total, AuxGraph::Cls::edge_aux);
    a.to_vertex.assign(total, -1);
    a.to_edge.assign(total, {-1, -1});
    a.to_candidate.assign(total, -1);
    a.ordinary_is_boundary.assign(total, 0);

    for (int ci = 0; ci < static_cast<int>(a.cands.size()); ++ci) {
        const Candidate& cd = a.cands[ci];
        int id = a.h_of_cand[ci];
        a.to_candidate[id] = ci;
        if (cd.kind == Candidate::Kind::high_deg) {
            a.cls[id] = AuxGraph::Cls::ordinary;
            a.to_vertex[id] = cd.vertices[0];
        } else {
            a.cls[id] = AuxGraph::Cls::path_aux;
            auto [b0, b1] = std::pair(cd.boundary[0], cd.boundary[1]);
            if (b0 < 0 || b1 < 0 || b0 == b1)
                throw std::invalid_argument(
                    "build_aux_graph: component is not 2-vertex-connected");
            int h0 = hid_of_pos[c.position_of(b0)];
            int h1 = hid_of_pos[c.position_of(b1)];
            a.h.add_edge(id, h0);
            a.h.add_edge(id, h1);
            a.ordinary_is_boundary[h0] = 1;
            a.ordinary_is_boundary[h1] = 1;
        }
    }
    for (int i = 0; i < static_cast<int>(high_edges.size()); ++i) {
        int id = nh + i;
        auto [u, w] = high_edges[i];
        a.to_edge[id] = {u, w};
        a.h.add_edge(id, hid_of_pos[c.position_of(u)]);
        a.h.add_edge(id, hid_of_pos[c.position_of(w)]);
    }
    return a;
}

namespace {

// Decides whether removing candidate ci keeps the rest of the component
// 2-edge-connected (Mode::edge) or 2-vertex-connected (Mode::vertex).
//
// The scan runs on the auxiliary graph minus the candidate's vertex.  Edge
// vertices adjacent to a removed high-degree candidate are dropped too: their
// underlying edge disappears with the candidate, so any separation they cause
// is spurious.  After that, a surviving auxiliary articulation point marks an
// edge of the residue that became a bridge, and an ordinary articulation
// point marks a real cut vertex of the residue.
//
// `work` must contain every vertex of a.h on entry and is restored on exit.
bool candidate_ok(const AuxGraph& a, int ci, Mode mode, VertexSet& work,
                  std::vector<int>& art_buf) {
    const int y = a.h_of_cand[ci];
    work.remove(y);
    const bool high = a.cands[ci].kind == Candidate::Kind::high_deg;
    if (high)
        for (int w : a.h.neighbors(y))
            if (a.cls[w] == AuxGraph::Cls::edge_aux) work.remove(w);

    articulation_points_into(a.h, work, art_buf);
    bool ok = true;
    for (int v : art_buf) {
        const bool aux = a.cls[v] != AuxGraph::Cls::ordinary;
        if (mode == Mode::edge ? aux : !aux) {
            ok = false;
            break;
        }
    }

    if (high)
        for (int w : a.h.neighbors(y))
            if (a.cls[w] == AuxGraph::Cls::edge_aux) work.add(w);
    work.add(y);
    return ok;
}

// A high-degree vertex bounding a two-deg path is never removable on its own:
// the adjacent path end would drop to degree 1.
bool boundary_high_deg(const AuxGraph& a, int ci) {
    return a.cands[ci].kind == Candidate::Kind::high_deg &&
           a.ordinary_is_boundary[a.h_of_cand[ci]];
}

// The vertices of a cycle block minus its unique attachment vertex, in cycle
// order starting next to the attachment.
Candidate cycle_minus_vertex(const Graph& g, const VertexSet& bs, int art) {
    Candidate cd;
    cd.kind = Candidate::Kind::two_deg_path;
    cd.boundary = {art, art};
    int prev = art;
    int cur = other_neighbor(g, bs, art, -1);
    while (cur != art) {
        cd.vertices.push_back(cur);
        int nxt = other_neighbor(g, bs, cur, prev);
        prev = cur;
        cur = nxt;
    }
    canonicalize(cd);
    return cd;
}

// Scans the minimal removable sets of a 2-edge-connected component c that
// avoid x (and always avoid the articulation points of c), in min-vertex
// order, calling emit until it returns false.  Decomposes into blocks: a
// cycle block hanging off exactly one articulation point contributes the rest
// of its cycle; a non-cycle block contributes its own removable candidates.
template <class F>
void scan_e_mrs(const Graph& g, const VertexSet& c, const VertexSet* x, F&& emit) {
    BlockDecomposition bd = blocks(g, c);
    const std::vector<int>& art = bd.articulation;
    auto in_art = [&](int v) { return std::binary_search(art.begin(), art.end(), v); };
    auto blocked = [&](const Candidate& cd) {
        for (int v : cd.vertices)
            if (in_art(v) || (x && x->contains(v))) return true;
        return false;
    };

    struct Entry {
        Candidate cand;
        int aux_idx;  // -1 for cycle-block entries, which need no further test
        int ci;
        int minv;
    };
    std::vector<Entry> entries;
    std::vector<AuxGraph> auxes;
    std::vector<VertexSet> works;

    VertexSet bs(g.num_vertices());
    for (const auto& blk : bd.blocks) {
        if (blk.size() < 3)
            throw std::logic_error("e_mrs: bridge block inside a 2-edge-connected component");
        bs.clear();
        for (int v : blk) bs.add(v);
        if (is_cycle(g, bs)) {
            int a = -1, cnt = 0;
            for (int v : blk)
                if (in_art(v)) {
                    a = v;
                    ++cnt;
                }
            if (cnt != 1) continue;
            Candidate cd = cycle_minus_vertex(g, bs, a);
            if (blocked(cd)) continue;
            int mv = cd.min_vertex();
            entries.push_back({std::move(cd), -1, -1, mv});
        } else {
            int ai = static_cast<int>(auxes.size());
            auxes.push_back(build_aux_graph(g, bs));
            works.push_back(VertexSet::full(auxes[ai].h.num_vertices()));
            const AuxGraph& aux = auxes[ai];
            for (int ci = 0; ci < static_cast<int>(aux.cands.size()); ++ci) {
                const Candidate& cd = aux.cands[ci];
                if (blocked(cd)) continue;
                if (boundary_high_deg(aux, ci)) continue;
                entries.push_back({cd, ai, ci, cd.min_vertex()});
            }
        }
    }

    std::sort(entries.begin(), entries.end(),
              [](const Entry& l, const Entry& r) { return l.minv < r.minv; });
    std::vector<int> art_buf;
    for (auto& e : entries) {
        if (e.aux_idx >= 0 &&
            !candidate_ok(auxes[e.aux_idx], e.ci, Mode::edge, works[e.aux_idx], art_buf))
            continue;
        if (!emit(std::move(e.cand))) return;
    }
}

// Same contract for a 2-vertex-connected component; a cycle has nothing
// removable.
template <class F>
void scan_v_mrs(const Graph& g, const VertexSet& c, const VertexSet* x, F&& emit) {
    if (is_cycle(g, c)) return;
    AuxGraph aux = build_aux_graph(g, c);
    VertexSet work = VertexSet::full(aux.h.num_vertices());
    std::vector<int> art_buf;
    for (int ci = 0; ci < static_cast<int>(aux.cands.size()); ++ci) {
        Candidate& cd = aux.cands[ci];
        bool skip = false;
        if (x)
            for (int v : cd.vertices)
                if (x->contains(v)) {
                    skip = true;
                    break;
                }
        if (skip) continue;
        if (!candidate_ok(aux, ci, Mode::vertex, work, art_buf)) continue;
        if (!emit(std::move(cd))) return;
    }
}

}  // namespace

std::vector<Candidate> block_e_mrs(const Graph& g, const VertexSet& c) {
    AuxGraph aux = build_aux_graph(g, c);
    VertexSet work = VertexSet::full(aux.h.num_vertices());
    std::vector<int> art_buf;
    std::vector<Candidate> out;
    for (int ci = 0; ci < static_cast<int>(aux.cands.size()); ++ci) {
        if (boundary_high_deg(aux, ci)) continue;
        if (candidate_ok(aux, ci, Mode::edge, work, art_buf))
            out.push_back(aux.cands[ci]);
    }
    return out;
}

std::vector<Candidate> e_mrs_all(const Graph& g, const VertexSet& c, const VertexSet& x) {
    std::vector<Candidate> out;
    scan_e_mrs(g, c, &x, [&](Candidate cd) {
        out.push_back(std::move(cd));
        return true;
    });
    return out;
}

std::vector<Candidate> v_mrs_all(const Graph& g, const VertexSet& c, const VertexSet& x) {
    std::vector<Candidate> out;
    scan_v_mrs(g, c, &x, [&](Candidate cd) {
        out.push_back(std::move(cd));
        return true;
    });
    return out;
}

std::optional<Candidate> compute_mrs_e(const Graph& g, const VertexSet& c, const VertexSet& x) {
    std::optional<Candidate> out;
    scan_e_mrs(g, c, &x, [&](Candidate cd) {
        out = std::move(cd);
        return false;
    });
    return out;
}

std::optional<Candidate> compute_mrs_v(const Graph& g, const VertexSet& c, const VertexSet& x) {
    std::optional<Candidate> out;
    scan_v_mrs(g, c, &x, [&](Candidate cd) {
        out = std::move(cd);
        return false;
    });
    return out;
}

}  // namespace enum2c
