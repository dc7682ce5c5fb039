#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "enum2c/bruteforce.hpp"
#include "enum2c/diff_io.hpp"
#include "enum2c/engine.hpp"

using namespace enum2c;

namespace {

std::vector<VertexList> collect_recursive(const Graph& g, const VertexSet& root,
                                          const VertexSet& include, Mode mode) {
    std::vector<VertexList> out;
    enumerate_recursive(root, include, make_oracle(g, mode), [&](const VertexList& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::vector<DiffRecord> collect_stream(const Graph& g, Mode mode, EngineStats* st = nullptr) {
    std::vector<DiffRecord> out;
    EngineOptions opt;
    opt.validate = true;
    enumerate_all(g, mode, [&](const DiffRecord& r) {
        out.push_back(r);
        return true;
    }, st, opt);
    return out;
}

std::vector<VertexList> sorted_family(std::vector<VertexList> f) {
    std::sort(f.begin(), f.end());
    return f;
}

}  // namespace

TEST_CASE("recursive enumerator on K4 emits the expected order") {
    Graph g = corpus::k4();
    auto got = collect_recursive(g, VertexSet::full(4), VertexSet(4), Mode::edge);
    CHECK(got == std::vector<VertexList>{
                     {0, 1, 2, 3}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

TEST_CASE("recursive enumerator honors the include set") {
    Graph g = corpus::k4();
    auto got =
        collect_recursive(g, VertexSet::full(4), VertexSet::of(4, {0, 1}), Mode::edge);
    CHECK(sorted_family(got) ==
          std::vector<VertexList>{{0, 1, 2}, {0, 1, 2, 3}, {0, 1, 3}});
}

TEST_CASE("recursive enumerator on a cycle yields only the cycle") {
    Graph g = corpus::c4();
    auto got = collect_recursive(g, VertexSet::full(4), VertexSet(4), Mode::edge);
    CHECK(got == std::vector<VertexList>{{0, 1, 2, 3}});
}

TEST_CASE("K4 diff stream matches the five-record trace") {
    auto recs = collect_stream(corpus::k4(), Mode::edge);
    REQUIRE(recs.size() == 5);
    std::vector<std::string> lines;
    for (const auto& r : recs) lines.push_back(format_record(r));
    CHECK(lines == std::vector<std::string>{"= 0 1 2 3", "-0", "+0 -1", "+1 -2", "+2 -3"});
}

TEST_CASE("cycle root emits exactly one full record") {
    auto recs = collect_stream(corpus::c4(), Mode::edge);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].full == VertexList{0, 1, 2, 3});
    CHECK(recs[0].ops.empty());
}

TEST_CASE("bowtie stream reconstructs both triangles after the root") {
    auto recs = collect_stream(corpus::bowtie(), Mode::edge);
    auto comps = reconstruct(recs);
    CHECK(comps == std::vector<VertexList>{{0, 1, 2, 3, 4}, {2, 3, 4}, {0, 1, 2}});
}

TEST_CASE("reconstruct applies signed ops") {
    std::vector<DiffRecord> recs;
    recs.push_back({{0, 1, 2, 3}, {}});
    recs.push_back({{}, {{'-', {0}}}});
    CHECK(reconstruct(recs) == std::vector<VertexList>{{0, 1, 2, 3}, {1, 2, 3}});
}

TEST_CASE("reconstruct rejects malformed streams") {
    CHECK_THROWS_AS(reconstruct({DiffRecord{{}, {{'-', {0}}}}}), StreamError);
    std::vector<DiffRecord> add_present;
    add_present.push_back({{0, 1}, {}});
    add_present.push_back({{}, {{'+', {0}}}});
    CHECK_THROWS_AS(reconstruct(add_present), StreamError);
    std::vector<DiffRecord> remove_absent;
    remove_absent.push_back({{0, 1}, {}});
    remove_absent.push_back({{}, {{'-', {2}}}});
    CHECK_THROWS_AS(reconstruct(remove_absent), StreamError);
}

TEST_CASE("enumerate_all counts on named graphs") {
    auto count = [](const Graph& g, Mode m) {
        return static_cast<int>(collect_stream(g, m).size());
    };
    CHECK(count(corpus::dumbbell(), Mode::edge) == 2);
    CHECK(count(corpus::diamond(), Mode::vertex) == 3);
    CHECK(count(corpus::k5(), Mode::vertex) == 16);
    CHECK(count(corpus::k5(), Mode::edge) == 16);
}

TEST_CASE("multi-root streams open each root with a full record") {
    auto recs = collect_stream(corpus::dumbbell(), Mode::edge);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].full == VertexList{0, 1, 2});
    CHECK(recs[1].full == VertexList{3, 4, 5});
}

TEST_CASE("streaming and recursive enumerators agree on random graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Graph g = random_graph(7 + static_cast<int>(seed % 4), 0.4, seed * 11 + 3);
        const int n = g.num_vertices();
        for (Mode mode : {Mode::edge, Mode::vertex}) {
            EngineStats st;
            auto recs = collect_stream(g, mode, &st);
            auto streamed = sorted_family(reconstruct(recs));
            for (std::size_t i = 1; i < streamed.size(); ++i)
                CHECK(streamed[i] != streamed[i - 1]);  // no duplicates

            std::vector<VertexList> recursed;
            for (const auto& root : enumeration_roots(g, mode)) {
                auto part = collect_recursive(g, VertexSet::of(n, root), VertexSet(n), mode);
                recursed.insert(recursed.end(), part.begin(), part.end());
            }
            CHECK(streamed == sorted_family(recursed));
            CHECK(streamed == brute::components(g, mode));

            CHECK(st.iter_gap_max <= 4);
            CHECK(st.oracle_gap_max <= 4);
            CHECK(st.ops_max <= 3);
            CHECK(st.peak_x <= n);
            CHECK(st.peak_seq <= n);
            CHECK(st.peak_idx <= n);
            CHECK(st.peak_depth <= n);
        }
    }
}

TEST_CASE("engine rejects an oracle that violates its contract") {
    Graph g = corpus::k4();
    // always "removes" vertex 0, even when it is forbidden
    Oracle bad = [](const VertexSet& c, const VertexSet&) -> std::optional<VertexList> {
        if (!c.contains(0)) return std::nullopt;
        return VertexList{0};
    };
    CHECK_THROWS_AS(
        enumerate_stream(VertexSet::full(4), bad, [](const DiffRecord&) { return true; }),
        OracleError);
}

TEST_CASE("sink can stop a stream early") {
    Graph g = corpus::k5();
    int seen = 0;
    bool finished = enumerate_all(g, Mode::vertex, [&](const DiffRecord&) {
        return ++seen < 3;
    });
    CHECK_FALSE(finished);
    CHECK(seen == 3);
}

TEST_CASE("diff text round trip") {
    auto recs = collect_stream(corpus::bowtie(), Mode::edge);
    std::string text;
    for (const auto& r : recs) text += format_record(r) + "\n";
    auto parsed = parse_diff_text(text);
    CHECK(parsed == recs);
    CHECK_THROWS_AS(parse_diff_text("* 1 2\n"), StreamError);
    CHECK_THROWS_AS(parse_diff_text("+1,\n"), StreamError);
}
