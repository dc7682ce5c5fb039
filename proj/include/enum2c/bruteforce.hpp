#pragma once

#include <cstdint>
#include <vector>

#include "enum2c/engine.hpp"
#include "enum2c/graph.hpp"

// Exponential-time reference oracles, used only for verification.  Everything
// here works from the raw definitions (delete an edge or vertex, retest
// connectivity) on bitmask subsets, independent of the DFS machinery it is
// meant to check.  Guards refuse instances that would blow up.
namespace enum2c::brute {

// Bitmask adjacency snapshot; valid for n <= 22.
struct MaskGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<std::pair<int, int>> all_edges;

    explicit MaskGraph(const Graph& g);
};

bool mask_connected(const MaskGraph& mg, std::uint32_t mask);
bool mask_is_2ec(const MaskGraph& mg, std::uint32_t mask);
bool mask_is_2vc(const MaskGraph& mg, std::uint32_t mask);
bool is_component_mask(const MaskGraph& mg, std::uint32_t mask, Mode mode);

// is_component_mask evaluated for every subset; 2^n bytes, guard n <= 16.
std::vector<std::uint8_t> predicate_table(const MaskGraph& mg, Mode mode);

// All vertex subsets inducing a 2-edge-connected (>= 2 vertices) or
// 2-vertex-connected (>= 3 vertices) subgraph, sorted lexicographically.
// `components` shards the subset scan across OpenMP threads;
// `components_serial` is the plain-loop reference kept for testing and
// benchmarking against it.  Guard n <= 22.
std::vector<VertexList> components(const Graph& g, Mode mode);
std::vector<VertexList> components_serial(const Graph& g, Mode mode);

// All minimal removable sets of component c, from the definition: Y is
// removable iff c \ Y stays in the family, minimal iff no proper nonempty
// subset is removable.  Sorted lexicographically.  Guard |c| <= 16.
std::vector<VertexList> mrs_family(const Graph& g, const VertexSet& c, Mode mode);

// Same result against a prebuilt predicate_table; cmask must index into it.
std::vector<VertexList> mrs_family_cached(const std::vector<std::uint8_t>& table,
                                          std::uint32_t cmask);

// Subset-disjointness over every nested component pair: each minimal
// removable set of the larger component is contained in or disjoint from the
// smaller.  Guard n <= 12.
bool sd_property(const Graph& g, Mode mode);

}  // namespace enum2c::brute
