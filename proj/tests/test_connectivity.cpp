#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "enum2c/bruteforce.hpp"
#include "enum2c/connectivity.hpp"

using namespace enum2c;

namespace {

using Edge = std::pair<int, int>;

std::uint32_t to_mask(const std::vector<int>& vs) {
    std::uint32_t m = 0;
    for (int v : vs) m |= std::uint32_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("bridges on named graphs") {
    CHECK(bridges(corpus::dumbbell(), VertexSet::full(6)) == std::vector<Edge>{{2, 3}});
    CHECK(bridges(corpus::bowtie(), VertexSet::full(5)).empty());
    CHECK(bridges(corpus::c4(), VertexSet::full(4)).empty());
    CHECK_THROWS_AS(bridges(corpus::dumbbell(), VertexSet::of(6, {0, 1, 4})),
                    std::invalid_argument);
}

TEST_CASE("articulation points on named graphs") {
    CHECK(articulation_points(corpus::bowtie(), VertexSet::full(5)) == std::vector<int>{2});
    CHECK(articulation_points(corpus::k4(), VertexSet::full(4)).empty());
    CHECK(articulation_points(corpus::dumbbell(), VertexSet::full(6)) == std::vector<int>{2, 3});
}

TEST_CASE("block decomposition on named graphs") {
    auto bd = blocks(corpus::bowtie(), VertexSet::full(5));
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    CHECK(bd.articulation == std::vector<int>{2});

    bd = blocks(corpus::diamond(), VertexSet::full(4));
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(bd.articulation.empty());

    bd = blocks(corpus::dumbbell(), VertexSet::full(6));
    CHECK(bd.blocks == std::vector<std::vector<int>>{{0, 1, 2}, {2, 3}, {3, 4, 5}});
}

TEST_CASE("maximal e-components") {
    CHECK(maximal_e_components(corpus::dumbbell()) ==
          std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}});
    CHECK(maximal_e_components(corpus::bowtie()) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
    Graph path = corpus::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(maximal_e_components(path).empty());
    CHECK(maximal_e_components(Graph(4)).empty());
}

TEST_CASE("2ec / 2vc predicates") {
    CHECK(is_2ec(corpus::c4(), VertexSet::full(4)));
    CHECK(is_2vc(corpus::c4(), VertexSet::full(4)));
    CHECK(is_2ec(corpus::bowtie(), VertexSet::full(5)));
    CHECK_FALSE(is_2vc(corpus::bowtie(), VertexSet::full(5)));
    CHECK_FALSE(is_2ec(corpus::k4(), VertexSet::of(4, {0, 1})));
    CHECK_FALSE(is_2ec(corpus::k4(), VertexSet(4)));
    CHECK_FALSE(is_2vc(corpus::k4(), VertexSet::of(4, {1, 2})));
}

TEST_CASE("cut partners") {
    // K_{2,3}: parts {0,1} and {2,3,4} -- the only cut point pair is {0,1}
    Graph h = corpus::from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    CHECK(cut_partners(h, 0) == std::vector<int>{1});
    CHECK(cut_partners(h, 2).empty());
    CHECK(cut_partners(corpus::k4(), 0).empty());
    CHECK_THROWS_AS(cut_partners(h, 9), std::invalid_argument);
}

TEST_CASE("lowlink results match the delete-and-retest definitions") {
    auto check_graph = [](const Graph& g) {
        const int n = g.num_vertices();
        VertexSet full = VertexSet::full(n);
        if (n == 0 || !is_connected(g, full)) return;
        brute::MaskGraph mg(g);
        std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;

        std::vector<Edge> expect_bridges;
        for (auto [u, v] : g.edges()) {
            bool still = false;
            // connected after deleting edge uv?
            Graph h(n);
            for (auto [a, b] : g.edges())
                if (!(a == u && b == v)) h.add_edge(a, b);
            still = n == 1 || is_connected(h, VertexSet::full(n));
            if (!still) expect_bridges.emplace_back(u, v);
        }
        CHECK(bridges(g, full) == expect_bridges);

        std::vector<int> expect_art;
        for (int v = 0; v < n; ++v) {
            if (n <= 2) break;
            std::uint32_t rest = all & ~(std::uint32_t{1} << v);
            if (!brute::mask_connected(mg, rest)) expect_art.push_back(v);
        }
        CHECK(articulation_points(g, full) == expect_art);
    };

    for (const auto& g : corpus::named()) check_graph(g);
    for (std::uint64_t seed = 0; seed < 120; ++seed)
        check_graph(random_graph(4 + static_cast<int>(seed % 4), 0.45, seed));
}

TEST_CASE("block decomposition invariants") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_graph(8, 0.35, seed * 13 + 1);
        VertexSet full = VertexSet::full(8);
        if (!is_connected(g, full)) continue;
        auto bd = blocks(g, full);

        std::vector<int> in_blocks(8, 0);
        for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(bd.blocks[i].begin(), bd.blocks[i].end(),
                                      bd.blocks[j].begin(), bd.blocks[j].end(),
                                      std::back_inserter(inter));
                CHECK(inter.size() <= 1);
            }
            for (int v : bd.blocks[i]) ++in_blocks[v];
        }
        for (int v = 0; v < 8; ++v) {
            if (degree_in(g, full, v) >= 1) CHECK(in_blocks[v] >= 1);
            bool art = std::binary_search(bd.articulation.begin(), bd.articulation.end(), v);
            CHECK(art == (in_blocks[v] >= 2));
        }
    }
}

TEST_CASE("maximal e-components are 2ec and cover every e-component") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(9, 0.3, seed * 31 + 7);
        auto maxes = maximal_e_components(g);
        for (const auto& comp : maxes) CHECK(is_2ec(g, VertexSet::of(9, comp)));
        for (const auto& comp : brute::components(g, Mode::edge)) {
            bool covered = false;
            for (const auto& mx : maxes)
                covered = covered || std::includes(mx.begin(), mx.end(), comp.begin(), comp.end());
            CHECK(covered);
        }
    }
}

TEST_CASE("cut partners match the definitional pair test") {
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 25 && seed < 400; ++seed) {
        int n = 5 + static_cast<int>(seed % 3);
        Graph g = random_graph(n, 0.55, seed);
        if (!is_2vc(g, VertexSet::full(n))) continue;
        ++tested;
        brute::MaskGraph mg(g);
        std::uint32_t all = (std::uint32_t{1} << n) - 1;
        for (int y = 0; y < n; ++y) {
            std::vector<int> expect;
            for (int u = 0; u < n; ++u) {
                if (u == y) continue;
                std::uint32_t rest = all & ~(std::uint32_t{1} << y) & ~(std::uint32_t{1} << u);
                if (!brute::mask_connected(mg, rest)) expect.push_back(u);
            }
            CHECK(cut_partners(g, y) == expect);
        }
    }
    CHECK(tested == 25);
}
