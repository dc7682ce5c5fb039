#pragma once

#include <array>
#include <optional>
#include <vector>

#include "enum2c/connectivity.hpp"
#include "enum2c/graph.hpp"

namespace enum2c {

// A removal candidate inside a component C: either a single vertex of induced
// degree > 2, or a maximal path of induced degree-2 vertices.  For a path,
// `boundary` holds the two higher-degree vertices adjacent to its ends (they
// coincide when the component is not 2-vertex-connected, and stay -1 when the
// component is a single cycle).
struct Candidate {
    enum class Kind { high_deg, two_deg_path };
    Kind kind = Kind::high_deg;
    std::vector<int> vertices;  // path order; exactly one entry for high_deg
    std::array<int, 2> boundary{-1, -1};

    int min_vertex() const;
    std::vector<int> sorted_vertices() const;
};

// Partition of c into high-degree singletons and maximal two-deg paths,
// ordered by smallest contained vertex.  Requires min induced degree >= 2
// (throws std::invalid_argument otherwise).
std::vector<Candidate> candidates(const Graph& g, const VertexSet& c);

// True iff G[c] is connected and every vertex has induced degree exactly 2.
bool is_cycle(const Graph& g, const VertexSet& c);

// Auxiliary graph of a 2-vertex-connected, non-cycle component: each maximal
// two-deg path is contracted to one path vertex and every edge joining two
// high-degree vertices is subdivided by one edge vertex.  The result is
// 2-vertex-connected, and every auxiliary vertex has exactly two neighbors,
// both ordinary.
struct AuxGraph {
    enum class Cls : unsigned char { ordinary, path_aux, edge_aux };

    Graph h;
    std::vector<Cls> cls;                       // by h vertex id
    std::vector<int> to_vertex;                 // ordinary id -> original vertex, else -1
    std::vector<std::pair<int, int>> to_edge;   // edge_aux id -> original edge, else (-1,-1)
    std::vector<int> to_candidate;              // h id -> index into cands, else -1
    std::vector<char> ordinary_is_boundary;     // by h id: bounds some two-deg path

    std::vector<Candidate> cands;
    std::vector<int> h_of_cand;                 // candidate index -> h vertex id
};

AuxGraph build_aux_graph(const Graph& g, const VertexSet& c);

// All candidates Y of a 2-vertex-connected non-cycle c whose removal leaves
// G[c] \ Y 2-edge-connected, in min-vertex order.
std::vector<Candidate> block_e_mrs(const Graph& g, const VertexSet& c);

// The minimal removable sets of component c that avoid x, in min-vertex
// order.  e_mrs_all requires c 2-edge-connected; v_mrs_all requires c
// 2-vertex-connected.
std::vector<Candidate> e_mrs_all(const Graph& g, const VertexSet& c, const VertexSet& x);
std::vector<Candidate> v_mrs_all(const Graph& g, const VertexSet& c, const VertexSet& x);

// One minimal removable set disjoint from x -- the one whose smallest vertex
// id is least -- or nullopt when none exists.
std::optional<Candidate> compute_mrs_e(const Graph& g, const VertexSet& c, const VertexSet& x);
std::optional<Candidate> compute_mrs_v(const Graph& g, const VertexSet& c, const VertexSet& x);

}  // namespace enum2c
