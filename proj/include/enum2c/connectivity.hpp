#pragma once

#include <utility>
#include <vector>

#include "enum2c/graph.hpp"

namespace enum2c {

// Block-cut decomposition of an induced subgraph.  Blocks of size >= 3 are
// exactly the maximal 2-vertex-connected vertex sets; size-2 blocks are
// bridge edges.  A vertex lies in two or more blocks iff it is an
// articulation point.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted ascending
    std::vector<int> articulation;         // sorted ascending
};

// All of these operate on the induced subgraph G[c] without materializing it.
// bridges/articulation_points/blocks require G[c] connected and throw
// std::invalid_argument otherwise.
std::vector<std::pair<int, int>> bridges(const Graph& g, const VertexSet& c);
std::vector<int> articulation_points(const Graph& g, const VertexSet& c);
// Allocation-free variant for hot paths; fills `out` (sorted ascending).
void articulation_points_into(const Graph& g, const VertexSet& c, std::vector<int>& out);
BlockDecomposition blocks(const Graph& g, const VertexSet& c);

// Connected components of G minus all its bridges, keeping only those with
// at least two vertices: the maximal 2-edge-connected vertex sets.
std::vector<std::vector<int>> maximal_e_components(const Graph& g);

// Blocks of size >= 3 over every connected component of G: the maximal
// 2-vertex-connected vertex sets.
std::vector<std::vector<int>> maximal_v_components(const Graph& g);

// Degenerate inputs yield false, never an error.
bool is_2ec(const Graph& g, const VertexSet& c);
bool is_2vc(const Graph& g, const VertexSet& c);

// For a 2-vertex-connected h: all u such that {y, u} is a cut point pair,
// i.e. the articulation points of h - y.
std::vector<int> cut_partners(const Graph& h, int y);

}  // namespace enum2c
