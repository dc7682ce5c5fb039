#include "enum2c/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace enum2c {

const char* mode_name(Mode m) { return m == Mode::edge ? "e" : "v"; }

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
    const int n = num_vertices();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("vertex id out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    auto insert_sorted = [](std::vector<int>& a, int w) {
        auto it = std::lower_bound(a.begin(), a.end(), w);
        if (it != a.end() && *it == w) throw std::invalid_argument("duplicate edge");
        a.insert(it, w);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Splits into lines, accepting LF and CRLF.
std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty() && cur.back() == '\r') cur.pop_back();
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

bool parse_two_ints(const std::string& s, long long& a, long long& b) {
    std::istringstream in(s);
    if (!(in >> a >> b)) return false;
    std::string rest;
    if (in >> rest) return false;
    return true;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    Graph g;
    long long n = -1, m = -1;
    int edges_read = 0;
    for (int i = 0; i < static_cast<int>(lines.size()); ++i) {
        const std::string& ln = lines[i];
        const int line_no = i + 1;
        if (blank(ln) || ln[ln.find_first_not_of(" \t")] == '#') continue;
        long long a, b;
        if (!parse_two_ints(ln, a, b)) throw ParseError(line_no, "malformed line: '" + ln + "'");
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError(line_no, "negative n or m in header");
            n = a;
            m = b;
            g = Graph(static_cast<int>(n));
            continue;
        }
        if (edges_read == m)
            throw ParseError(line_no, "more than the declared " + std::to_string(m) + " edges");
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw ParseError(line_no, "vertex id out of range [0," + std::to_string(n - 1) + "]");
        if (a == b) throw ParseError(line_no, "self-loop");
        if (g.has_edge(static_cast<int>(a), static_cast<int>(b)))
            throw ParseError(line_no, "duplicate edge");
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
        ++edges_read;
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()) + 1, "missing 'n m' header");
    if (edges_read != m)
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "declared " + std::to_string(m) + " edges but found " +
                             std::to_string(edges_read));
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability out of [0,1]");
    Graph g(n);
    std::mt19937_64 rng(seed);
    // Explicit 53-bit uniform draw; keeps the edge set identical across
    // standard library implementations.
    constexpr double inv53 = 1.0 / 9007199254740992.0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) * inv53 < p) g.add_edge(u, v);
    return g;
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.add(v);
    return s;
}

VertexSet VertexSet::of(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.add(v);
    return s;
}

std::vector<int> VertexSet::sorted_members() const {
    std::vector<int> out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

int degree_in(const Graph& g, const VertexSet& c, int v) {
    if (v < 0 || v >= g.num_vertices() || !c.contains(v))
        throw std::invalid_argument("degree_in: vertex not in the subset");
    int d = 0;
    for (int w : g.neighbors(v))
        if (c.contains(w)) ++d;
    return d;
}

bool is_connected(const Graph& g, const VertexSet& c) {
    if (c.empty()) throw std::invalid_argument("is_connected: empty subset");
    std::vector<char> seen(c.size(), 0);
    std::vector<int> stack;
    int start = c.members()[0];
    seen[c.position_of(start)] = 1;
    stack.push_back(start);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!c.contains(w)) continue;
            char& s = seen[c.position_of(w)];
            if (!s) {
                s = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == c.size();
}

}  // namespace enum2c
