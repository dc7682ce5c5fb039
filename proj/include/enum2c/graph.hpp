#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace enum2c {

// Which induced-subgraph family is being enumerated.
enum class Mode { edge, vertex };

const char* mode_name(Mode m);

// Simple undirected graph on dense vertex ids 0..n-1, immutable once built.
// Neighbor lists are kept sorted ascending so every traversal order, and
// therefore every output, is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    // Throws std::invalid_argument on self-loops, duplicates or bad ids.
    void add_edge(int u, int v);
    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int m_ = 0;
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_no, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
};

// Edge-list format: first content line "n m", then m lines "u v".
// Lines starting with '#' are comments; LF and CRLF both accepted.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

// G(n,p): each unordered pair kept independently with probability p.
// Bit-exact deterministic for a given (n, p, seed).
Graph random_graph(int n, double p, std::uint64_t seed);

// Dynamic subset of 0..n-1 with O(1) membership/insert/delete.  The member
// list behaves as a stack: after any sequence of add(), truncate(k) restores
// the exact earlier state of length k.  remove() of an interior member swaps
// with the last entry, which keeps deletion O(1) but is only used where set
// identity (not list order) matters.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : pos_(universe, npos) {}

    static VertexSet full(int universe);
    static VertexSet of(int universe, const std::vector<int>& vs);

    int universe() const { return static_cast<int>(pos_.size()); }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }

    bool contains(int v) const { return pos_[v] != npos; }
    // Index of v in members(); stable while the set is not mutated.
    int position_of(int v) const {
        assert(contains(v));
        return static_cast<int>(pos_[v]);
    }

    void add(int v) {
        assert(!contains(v));
        pos_[v] = static_cast<std::uint32_t>(members_.size());
        members_.push_back(v);
    }
    void remove(int v) {
        assert(contains(v));
        std::uint32_t p = pos_[v];
        int last = members_.back();
        members_[p] = last;
        pos_[last] = p;
        members_.pop_back();
        pos_[v] = npos;
    }
    void truncate(int new_size) {
        assert(new_size >= 0 && new_size <= size());
        while (static_cast<int>(members_.size()) > new_size) {
            pos_[members_.back()] = npos;
            members_.pop_back();
        }
    }
    void clear() { truncate(0); }

    const std::vector<int>& members() const { return members_; }
    std::vector<int> sorted_members() const;

private:
    static constexpr std::uint32_t npos = 0xffffffffu;
    std::vector<std::uint32_t> pos_;
    std::vector<int> members_;
};

// deg_{G[c]}(v).  Throws std::invalid_argument if v is not in c.
int degree_in(const Graph& g, const VertexSet& c, int v);

// Whether G[c] is connected.  Throws std::invalid_argument on empty c.
bool is_connected(const Graph& g, const VertexSet& c);

}  // namespace enum2c
