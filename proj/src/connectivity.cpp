#include "enum2c/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

namespace enum2c {

namespace {

// Reusable DFS state.  Visitation is tracked with epoch stamps so a fresh
// scan never pays an O(n) clear; the same scratch serves the many small
// per-candidate scans issued by the MRS oracle.
struct Scratch {
    std::vector<int> disc, low;
    std::vector<std::int64_t> stamp, art_stamp;
    struct Frame {
        int v;
        int parent;
        std::uint32_t ai;  // next adjacency index
    };
    std::vector<Frame> frames;
    std::vector<int> vstack;
    std::int64_t epoch = 0;

    void begin(int n) {
        if (static_cast<int>(disc.size()) < n) {
            disc.resize(n);
            low.resize(n);
            stamp.resize(n, 0);
            art_stamp.resize(n, 0);
        }
        ++epoch;
        frames.clear();
        vstack.clear();
    }
    bool seen(int v) const { return stamp[v] == epoch; }
};

thread_local Scratch tls;

// Iterative lowlink DFS over G[c] starting at root.  Any of the three output
// sinks may be null.  Returns the number of vertices reached.
int scan_from(const Graph& g, const VertexSet& c, int root, Scratch& s,
              std::vector<std::pair<int, int>>* bridges_out,
              std::vector<int>* artic_out,
              std::vector<std::vector<int>>* blocks_out) {
    int timer = 0;
    int reached = 1;
    s.stamp[root] = s.epoch;
    s.disc[root] = s.low[root] = timer++;
    s.vstack.push_back(root);
    s.frames.push_back({root, -1, 0});
    int root_children = 0;
    auto mark_art = [&](int v) {
        if (s.art_stamp[v] != s.epoch) {
            s.art_stamp[v] = s.epoch;
            if (artic_out) artic_out->push_back(v);
        }
    };
    while (!s.frames.empty()) {
        Scratch::Frame& f = s.frames.back();
        const auto& adj = g.neighbors(f.v);
        bool descended = false;
        while (f.ai < adj.size()) {
            int w = adj[f.ai++];
            if (!c.contains(w)) continue;
            if (w == f.parent) continue;  // simple graph: one parent edge
            if (!s.seen(w)) {
                s.stamp[w] = s.epoch;
                s.disc[w] = s.low[w] = timer++;
                ++reached;
                s.vstack.push_back(w);
                if (f.v == root) ++root_children;
                s.frames.push_back({w, f.v, 0});
                descended = true;
                break;
            }
            s.low[f.v] = std::min(s.low[f.v], s.disc[w]);
        }
        if (descended) continue;
        const int v = f.v, parent = f.parent;
        s.frames.pop_back();
        if (parent == -1) break;
        s.low[parent] = std::min(s.low[parent], s.low[v]);
        if (s.low[v] > s.disc[parent] && bridges_out)
            bridges_out->emplace_back(std::min(parent, v), std::max(parent, v));
        if (s.low[v] >= s.disc[parent]) {
            if (parent != root) mark_art(parent);
            if (blocks_out) {
                std::vector<int> blk;
                for (;;) {
                    int w = s.vstack.back();
                    s.vstack.pop_back();
                    blk.push_back(w);
                    if (w == v) break;
                }
                blk.push_back(parent);
                std::sort(blk.begin(), blk.end());
                blocks_out->push_back(std::move(blk));
            }
        }
    }
    if (root_children >= 2) mark_art(root);
    return reached;
}

int min_member(const VertexSet& c) {
    int best = c.members()[0];
    for (int v : c.members()) best = std::min(best, v);
    return best;
}

void require_connected(int reached, const VertexSet& c, const char* op) {
    if (reached != c.size())
        throw std::invalid_argument(std::string(op) + ": induced subgraph is disconnected");
}

}  // namespace

std::vector<std::pair<int, int>> bridges(const Graph& g, const VertexSet& c) {
    if (c.empty()) throw std::invalid_argument("bridges: empty subset");
    tls.begin(g.num_vertices());
    std::vector<std::pair<int, int>> out;
    int reached = scan_from(g, c, min_member(c), tls, &out, nullptr, nullptr);
    require_connected(reached, c, "bridges");
    std::sort(out.begin(), out.end());
    return out;
}

void articulation_points_into(const Graph& g, const VertexSet& c, std::vector<int>& out) {
    out.clear();
    if (c.empty()) throw std::invalid_argument("articulation_points: empty subset");
    tls.begin(g.num_vertices());
    int reached = scan_from(g, c, min_member(c), tls, nullptr, &out, nullptr);
    require_connected(reached, c, "articulation_points");
    std::sort(out.begin(), out.end());
}

std::vector<int> articulation_points(const Graph& g, const VertexSet& c) {
    std::vector<int> out;
    articulation_points_into(g, c, out);
    return out;
}

BlockDecomposition blocks(const Graph& g, const VertexSet& c) {
    if (c.empty()) throw std::invalid_argument("blocks: empty subset");
    tls.begin(g.num_vertices());
    BlockDecomposition bd;
    int reached = scan_from(g, c, min_member(c), tls, nullptr, &bd.articulation, &bd.blocks);
    require_connected(reached, c, "blocks");
    std::sort(bd.articulation.begin(), bd.articulation.end());
    std::sort(bd.blocks.begin(), bd.blocks.end());
    return bd;
}

std::vector<std::vector<int>> maximal_e_components(const Graph& g) {
    const int n = g.num_vertices();
    VertexSet all = VertexSet::full(n);
    tls.begin(n);
    std::vector<std::pair<int, int>> brs;
    for (int v = 0; v < n; ++v)
        if (!tls.seen(v)) scan_from(g, all, v, tls, &brs, nullptr, nullptr);

    std::unordered_set<std::int64_t> bridge_keys;
    bridge_keys.reserve(brs.size() * 2);
    for (auto [u, v] : brs) bridge_keys.insert(static_cast<std::int64_t>(u) * n + v);
    auto is_bridge = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return bridge_keys.count(static_cast<std::int64_t>(u) * n + v) != 0;
    };

    std::vector<char> vis(n, 0);
    std::vector<int> stack;
    std::vector<std::vector<int>> out;
    for (int v = 0; v < n; ++v) {
        if (vis[v]) continue;
        std::vector<int> comp;
        vis[v] = 1;
        stack.push_back(v);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (vis[w] || is_bridge(u, w)) continue;
                vis[w] = 1;
                stack.push_back(w);
            }
        }
        if (comp.size() >= 2) {
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<int>> maximal_v_components(const Graph& g) {
    const int n = g.num_vertices();
    VertexSet all = VertexSet::full(n);
    tls.begin(n);
    std::vector<std::vector<int>> blks;
    for (int v = 0; v < n; ++v)
        if (!tls.seen(v)) scan_from(g, all, v, tls, nullptr, nullptr, &blks);
    std::vector<std::vector<int>> out;
    for (auto& b : blks) {
        if (b.size() < 3) continue;
        std::sort(b.begin(), b.end());
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_2ec(const Graph& g, const VertexSet& c) {
    if (c.size() < 2) return false;
    tls.begin(g.num_vertices());
    std::vector<std::pair<int, int>> brs;
    int reached = scan_from(g, c, min_member(c), tls, &brs, nullptr, nullptr);
    return reached == c.size() && brs.empty();
}

bool is_2vc(const Graph& g, const VertexSet& c) {
    if (c.size() < 3) return false;
    tls.begin(g.num_vertices());
    std::vector<int> arts;
    int reached = scan_from(g, c, min_member(c), tls, nullptr, &arts, nullptr);
    return reached == c.size() && arts.empty();
}

std::vector<int> cut_partners(const Graph& h, int y) {
    if (y < 0 || y >= h.num_vertices())
        throw std::invalid_argument("cut_partners: vertex out of range");
    VertexSet rest(h.num_vertices());
    for (int v = 0; v < h.num_vertices(); ++v)
        if (v != y) rest.add(v);
    return articulation_points(h, rest);
}

}  // namespace enum2c
