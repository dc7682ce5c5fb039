#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "enum2c/bruteforce.hpp"

using namespace enum2c;

TEST_CASE("brute components on named graphs") {
    CHECK(brute::components(corpus::diamond(), Mode::edge) ==
          std::vector<VertexList>{{0, 1, 2}, {0, 1, 2, 3}, {1, 2, 3}});
    CHECK(brute::components(corpus::k5(), Mode::vertex).size() == 16);
    Graph path = corpus::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(brute::components(path, Mode::edge).empty());
}

TEST_CASE("brute mrs families on named graphs") {
    CHECK(brute::mrs_family(corpus::k4(), VertexSet::full(4), Mode::edge) ==
          std::vector<VertexList>{{0}, {1}, {2}, {3}});
    CHECK(brute::mrs_family(corpus::diamond(), VertexSet::full(4), Mode::vertex) ==
          std::vector<VertexList>{{0}, {3}});
    CHECK(brute::mrs_family(corpus::c5(), VertexSet::full(5), Mode::edge).empty());
}

TEST_CASE("subset-disjoint property holds on small graphs") {
    for (int n = 2; n <= 5; ++n) {
        std::uint64_t seen = 0;
        // a few random graphs per size; the acceptance suite runs exhaustively
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = random_graph(n, 0.5, seed + seen++);
            CHECK(brute::sd_property(g, Mode::edge));
            CHECK(brute::sd_property(g, Mode::vertex));
        }
    }
    CHECK(brute::sd_property(corpus::bowtie(), Mode::edge));
    CHECK(brute::sd_property(corpus::k4(), Mode::vertex));
}

TEST_CASE("v-components are a subset of e-components") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8, 0.45, seed * 17 + 5);
        auto e = brute::components(g, Mode::edge);
        auto v = brute::components(g, Mode::vertex);
        for (const auto& c : v) CHECK(std::binary_search(e.begin(), e.end(), c));
    }
}

TEST_CASE("brute mrs members are pairwise disjoint") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(8, 0.5, seed + 321);
        for (Mode mode : {Mode::edge, Mode::vertex}) {
            for (const auto& comp : brute::components(g, mode)) {
                auto fam = brute::mrs_family(g, VertexSet::of(8, comp), mode);
                std::vector<char> seen(8, 0);
                for (const auto& y : fam)
                    for (int v : y) {
                        CHECK_FALSE(seen[v]);
                        seen[v] = 1;
                    }
            }
        }
    }
}

TEST_CASE("empty filtered family iff the component is alone in its interval") {
    // brute counterpart of the oracle's Nil contract
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = random_graph(7, 0.5, seed + 1000);
        for (Mode mode : {Mode::edge, Mode::vertex}) {
            auto comps = brute::components(g, mode);
            for (const auto& comp : comps) {
                auto fam = brute::mrs_family(g, VertexSet::of(7, comp), mode);
                // X = the first half of comp's vertices
                VertexList x(comp.begin(), comp.begin() + comp.size() / 2);
                bool any_disjoint = false;
                for (const auto& y : fam) {
                    bool hits = false;
                    for (int v : y)
                        hits = hits || std::binary_search(x.begin(), x.end(), v);
                    any_disjoint = any_disjoint || !hits;
                }
                int between = 0;
                for (const auto& c2 : comps)
                    if (std::includes(comp.begin(), comp.end(), c2.begin(), c2.end()) &&
                        std::includes(c2.begin(), c2.end(), x.begin(), x.end()))
                        ++between;
                CHECK(any_disjoint == (between > 1));
            }
        }
    }
}

TEST_CASE("parallel and serial subset scans agree") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = random_graph(11, 0.35, seed * 7 + 2);
        for (Mode mode : {Mode::edge, Mode::vertex})
            CHECK(brute::components(g, mode) == brute::components_serial(g, mode));
    }
}

TEST_CASE("guards refuse oversized instances") {
    Graph big(23);
    CHECK_THROWS_AS(brute::components(big, Mode::edge), std::invalid_argument);
    Graph g13 = random_graph(13, 0.3, 1);
    CHECK_THROWS_AS(brute::sd_property(g13, Mode::edge), std::invalid_argument);
    Graph g18 = corpus::complete(18);
    CHECK_THROWS_AS(brute::mrs_family(g18, VertexSet::full(18), Mode::edge),
                    std::invalid_argument);
}
