#include "enum2c/bruteforce.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace enum2c::brute {

namespace {

constexpr int kMaskLimit = 22;

std::uint32_t bit(int v) { return std::uint32_t{1} << v; }

VertexList mask_to_list(std::uint32_t mask) {
    VertexList out;
    while (mask) {
        int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

MaskGraph::MaskGraph(const Graph& g) : n(g.num_vertices()), adj(g.num_vertices(), 0) {
    if (n > kMaskLimit) throw std::invalid_argument("brute force guard: n > 22");
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            adj[u] |= bit(v);
            if (u < v) all_edges.emplace_back(u, v);
        }
}

bool mask_connected(const MaskGraph& mg, std::uint32_t mask) {
    if (mask == 0) return false;
    std::uint32_t reach = mask & (~mask + 1);  // lowest set bit
    for (;;) {
        std::uint32_t frontier = reach;
        std::uint32_t grown = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            grown |= mg.adj[v] & mask;
        }
        if (grown == reach) break;
        reach = grown;
    }
    return reach == mask;
}

namespace {

// Connectivity of G[mask] with one edge pretended absent.
bool connected_without_edge(const MaskGraph& mg, std::uint32_t mask, int eu, int ev) {
    std::uint32_t reach = mask & (~mask + 1);
    for (;;) {
        std::uint32_t frontier = reach;
        std::uint32_t grown = reach;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            std::uint32_t nb = mg.adj[v] & mask;
            if (v == eu) nb &= ~bit(ev);
            if (v == ev) nb &= ~bit(eu);
            grown |= nb;
        }
        if (grown == reach) break;
        reach = grown;
    }
    return reach == mask;
}

}  // namespace

bool mask_is_2ec(const MaskGraph& mg, std::uint32_t mask) {
    if (std::popcount(mask) < 2) return false;
    if (!mask_connected(mg, mask)) return false;
    for (auto [u, v] : mg.all_edges) {
        if (!(mask & bit(u)) || !(mask & bit(v))) continue;
        if (!connected_without_edge(mg, mask, u, v)) return false;  // bridge
    }
    return true;
}

bool mask_is_2vc(const MaskGraph& mg, std::uint32_t mask) {
    if (std::popcount(mask) < 3) return false;
    if (!mask_connected(mg, mask)) return false;
    std::uint32_t rest = mask;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (!mask_connected(mg, mask & ~bit(v))) return false;  // articulation point
    }
    return true;
}

bool is_component_mask(const MaskGraph& mg, std::uint32_t mask, Mode mode) {
    return mode == Mode::edge ? mask_is_2ec(mg, mask) : mask_is_2vc(mg, mask);
}

std::vector<std::uint8_t> predicate_table(const MaskGraph& mg, Mode mode) {
    if (mg.n > 16) throw std::invalid_argument("predicate_table guard: n > 16");
    const std::uint32_t total = std::uint32_t{1} << mg.n;
    std::vector<std::uint8_t> table(total, 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (long long m = 1; m < static_cast<long long>(total); ++m)
        table[m] = is_component_mask(mg, static_cast<std::uint32_t>(m), mode);
    return table;
}

namespace {

std::vector<VertexList> masks_to_sorted_lists(std::vector<std::uint32_t>& masks) {
    std::vector<VertexList> out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) out.push_back(mask_to_list(m));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<VertexList> components(const Graph& g, Mode mode) {
    MaskGraph mg(g);
    const long long total = 1LL << mg.n;
    std::vector<std::uint32_t> hits;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<std::uint32_t> local;
#pragma omp for schedule(dynamic, 4096) nowait
        for (long long m = 1; m < total; ++m)
            if (is_component_mask(mg, static_cast<std::uint32_t>(m), mode))
                local.push_back(static_cast<std::uint32_t>(m));
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
    std::sort(hits.begin(), hits.end());
#else
    for (long long m = 1; m < total; ++m)
        if (is_component_mask(mg, static_cast<std::uint32_t>(m), mode))
            hits.push_back(static_cast<std::uint32_t>(m));
#endif
    return masks_to_sorted_lists(hits);
}

std::vector<VertexList> components_serial(const Graph& g, Mode mode) {
    MaskGraph mg(g);
    const long long total = 1LL << mg.n;
    std::vector<std::uint32_t> hits;
    for (long long m = 1; m < total; ++m)
        if (is_component_mask(mg, static_cast<std::uint32_t>(m), mode))
            hits.push_back(static_cast<std::uint32_t>(m));
    return masks_to_sorted_lists(hits);
}

std::vector<VertexList> mrs_family(const Graph& g, const VertexSet& c, Mode mode) {
    const int k = c.size();
    if (k > 16) throw std::invalid_argument("mrs_family guard: |c| > 16");
    MaskGraph mg(g);
    const std::vector<int> verts = c.sorted_members();
    std::uint32_t cmask = 0;
    for (int v : verts) cmask |= bit(v);
    if (!is_component_mask(mg, cmask, mode))
        throw std::invalid_argument("mrs_family: c is not a component of the system");

    auto to_vertex_mask = [&](std::uint32_t sub) {
        std::uint32_t m = 0;
        while (sub) {
            int i = std::countr_zero(sub);
            sub &= sub - 1;
            m |= bit(verts[i]);
        }
        return m;
    };

    const std::uint32_t subs = std::uint32_t{1} << k;
    std::vector<std::uint8_t> removable(subs, 0);
#pragma omp parallel for schedule(dynamic, 1024)
    for (long long y = 1; y < static_cast<long long>(subs); ++y)
        removable[y] =
            is_component_mask(mg, cmask & ~to_vertex_mask(static_cast<std::uint32_t>(y)), mode);

    std::vector<VertexList> out;
    for (std::uint32_t y = 1; y < subs; ++y) {
        if (!removable[y]) continue;
        bool minimal = true;
        for (std::uint32_t z = (y - 1) & y; z; z = (z - 1) & y)
            if (removable[z]) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(mask_to_list(to_vertex_mask(y)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexList> mrs_family_cached(const std::vector<std::uint8_t>& table,
                                          std::uint32_t cmask) {
    std::vector<VertexList> out;
    for (std::uint32_t y = (cmask - 1) & cmask; y; y = (y - 1) & cmask) {
        if (!table[cmask & ~y]) continue;
        bool minimal = true;
        for (std::uint32_t z = (y - 1) & y; z; z = (z - 1) & y)
            if (table[cmask & ~z]) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(mask_to_list(y));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool sd_property(const Graph& g, Mode mode) {
    if (g.num_vertices() > 12) throw std::invalid_argument("sd_property guard: n > 12");
    MaskGraph mg(g);
    auto table = predicate_table(mg, mode);

    std::vector<std::uint32_t> comps;
    for (std::uint32_t m = 1; m < table.size(); ++m)
        if (table[m]) comps.push_back(m);

    // minimal removable sets of C, as masks, straight from the definition
    auto family_of = [&](std::uint32_t cmask) {
        std::vector<std::uint32_t> fam;
        for (std::uint32_t y = (cmask - 1) & cmask; y; y = (y - 1) & cmask) {
            if (!table[cmask & ~y]) continue;
            bool minimal = true;
            for (std::uint32_t z = (y - 1) & y; z; z = (z - 1) & y)
                if (table[cmask & ~z]) {
                    minimal = false;
                    break;
                }
            if (minimal) fam.push_back(y);
        }
        return fam;
    };

    for (std::uint32_t cm : comps) {
        auto fam = family_of(cm);
        if (fam.empty()) continue;
        for (std::uint32_t sm : comps) {
            if (sm == cm || (sm & cm) != sm) continue;  // need sm strictly inside cm
            for (std::uint32_t y : fam)
                if ((y & sm) != y && (y & sm) != 0) return false;
        }
    }
    return true;
}

}  // namespace enum2c::brute
