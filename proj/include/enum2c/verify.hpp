#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "enum2c/engine.hpp"
#include "enum2c/graph.hpp"

// Cross-validation of the streaming enumerator and its oracle against the
// brute-force definitions, shared by the CLI `verify` subcommand and the
// acceptance suite.
namespace enum2c::verify {

struct Failure {
    std::string check;
    std::string detail;
    std::string graph_text;  // witness, edge-list format
};
using Report = std::optional<Failure>;  // nullopt = pass

// Worst-case engine behavior observed across a batch of runs.
struct StatsAgg {
    long long iter_gap_max = 0;
    long long oracle_gap_max = 0;
    long long ops_max = 0;
    bool space_ok = true;
    long long runs = 0;

    void absorb(const EngineStats& st, int n);
};

// Streamed diff output reconstructs to exactly the brute-force component
// family, with no duplicates, matches the recursive enumerator, keeps every
// root record full-form, and stays within the per-record structural bounds.
Report check_enumeration(const Graph& g, Mode mode, StatsAgg* agg = nullptr);

// For every component of the family, the oracle's full MRS list equals the
// brute-force family.  Cost grows as 3^n; keep n <= 10.
Report check_oracle_equality(const Graph& g, Mode mode);

Report check_sd(const Graph& g, Mode mode);

// All connected labeled graphs on n vertices (n <= 5 stays tiny).
std::vector<Graph> exhaustive_connected(int n);

struct SuiteOptions {
    int n_max = 5;
    int trials = 60;
    std::uint64_t seed = 1;
    std::ostream* log = nullptr;
};

// Exhaustive small graphs plus seeded random instances, both modes, all
// checks (oracle equality limited to n <= 10, subset-disjointness to n <= 9).
Report run_suite(const SuiteOptions& opt);

}  // namespace enum2c::verify
