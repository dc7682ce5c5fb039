#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "enum2c/graph.hpp"

namespace enum2c {

using VertexList = std::vector<int>;

// One enumeration output.  The first record of every root stream carries the
// complete root set in `full` and no ops; every later record holds at most
// three signed set operations relative to the previous output, each op being
// one minimal removable set.
struct DiffOp {
    char sign = '+';  // '+' or '-'
    VertexList vertices;  // sorted ascending

    bool operator==(const DiffOp&) const = default;
};

struct DiffRecord {
    VertexList full;  // nonempty only for a root record
    std::vector<DiffOp> ops;

    bool is_root() const { return !full.empty(); }
    bool operator==(const DiffRecord&) const = default;
};

// The oracle contract: given a component and a forbidden set, return one
// minimal removable set disjoint from the forbidden set, or nullopt when no
// such set exists.  Must be deterministic.
using Oracle = std::function<std::optional<VertexList>(const VertexSet& component,
                                                       const VertexSet& forbidden)>;

// Sinks return false to stop the enumeration early.
using RecordSink = std::function<bool(const DiffRecord&)>;
using ComponentSink = std::function<bool(const VertexList&)>;

// Thrown when an oracle result violates its contract.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by reconstruct() on an inconsistent diff stream.
struct StreamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instrumentation counters for one or more enumeration runs.  Gap statistics
// cover the stretch between two consecutive records of the same stream.
struct EngineStats {
    long long records = 0;
    long long loop_iterations = 0;
    long long oracle_calls = 0;

    long long gap_samples = 0;
    long long iter_gap_sum = 0;
    long long iter_gap_max = 0;
    long long oracle_gap_sum = 0;
    long long oracle_gap_max = 0;
    long long ops_max = 0;

    long long peak_x = 0;
    long long peak_seq = 0;
    long long peak_idx = 0;
    long long peak_depth = 0;

    bool timing = false;  // set before the run to sample wall-clock delays
    long long delay_sum_ns = 0;
    long long delay_max_ns = 0;

    double mean_iter_gap() const { return gap_samples ? double(iter_gap_sum) / gap_samples : 0.0; }
    double mean_oracle_gap() const {
        return gap_samples ? double(oracle_gap_sum) / gap_samples : 0.0;
    }
    double mean_delay_ns() const { return gap_samples ? double(delay_sum_ns) / gap_samples : 0.0; }

    void merge(const EngineStats& o);
};

struct EngineOptions {
    // Re-derive the removal-sequence and forbidden-set invariants every
    // iteration; O(n) per step, meant for verification runs only.
    bool validate = false;
};

// Reference enumerator: emits every component between `include` and `root`
// exactly once, as full sorted vertex lists, recursing on the oracle's
// partition.  Returns false iff the sink stopped the run.
bool enumerate_recursive(const VertexSet& root, const VertexSet& include, const Oracle& oracle,
                         const ComponentSink& sink);

// Streaming enumerator: emits the same family as enumerate_recursive(root, {})
// as one DiffRecord per component.  Nodes at odd recursion depth are emitted
// on first arrival, nodes at even depth when their oracle is exhausted, so
// consecutive records are a bounded number of steps apart.  Never buffers
// more than the single pending record.
bool enumerate_stream(const VertexSet& root, const Oracle& oracle, const RecordSink& sink,
                      EngineStats* stats = nullptr, const EngineOptions& opt = {});

// Applies a diff stream back to full component lists.  Throws StreamError on
// a malformed stream (op adds a present vertex, removes an absent one, or the
// stream does not start with a full record).
std::vector<VertexList> reconstruct(const std::vector<DiffRecord>& records);

// Roots of the per-mode decomposition: maximal 2-edge-connected vertex sets,
// or blocks of size >= 3.
std::vector<VertexList> enumeration_roots(const Graph& g, Mode mode);

Oracle make_oracle(const Graph& g, Mode mode);

// Runs enumerate_stream over every root with the mode's oracle.  Each root
// stream opens with its own full record, so concatenated streams stay
// unambiguous.
bool enumerate_all(const Graph& g, Mode mode, const RecordSink& sink,
                   EngineStats* stats = nullptr, const EngineOptions& opt = {});

}  // namespace enum2c
