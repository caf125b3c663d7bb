#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "forcing/bounds.hpp"
#include "forcing/graph.hpp"
#include "forcing/solver.hpp"

namespace forcing {

enum class RecordStatus {
    Ok,
    Counterexample, // bound violated, or equality and extremal class disagree
    Unresolved,     // solver budget exhausted
    Skipped,        // outside the bound's hypotheses (disconnected, Δ < 2, not k-connected)
    ParseError,
};

struct VerificationRecord {
    std::size_t line = 0; // 1-based input line
    std::string graph6;
    int n = 0;
    int max_degree = 0;
    int min_degree = 0;
    int k = 1;
    int f_k = 0;
    Rational bound;
    bool equality = false;
    ExtremalClass extremal_class;
    std::optional<bool> claim1_ok;
    std::uint64_t solver_nodes = 0;
    RecordStatus status = RecordStatus::Ok;
    std::string note;
    double elapsed_ms = 0; // not serialised
};

std::string to_string(RecordStatus s);

/// One JSON object per line; field names follow the struct.
std::string to_json_line(const VerificationRecord& r);

struct VerifyOptions {
    int k = 1;
    int workers = 1;
    SolveLimits limits;
    bool claim1 = true;       // run check_claim1 on extremal graphs with Δ >= 3
    std::size_t batch = 1024; // lines read per parallel batch
};

struct OrderCensus {
    std::size_t graph_count = 0;
    std::size_t extremal_count = 0;
    std::vector<std::string> extremal_graph6;
    std::uint64_t max_solver_nodes = 0;
    double wall_time_ms = 0;
};

struct VerifySummary {
    std::size_t lines = 0;
    std::size_t processed = 0;
    std::size_t skipped = 0;
    std::size_t parse_errors = 0;
    std::size_t unresolved = 0;
    std::size_t claim1_checked = 0;
    std::size_t claim1_failed = 0;
    std::vector<VerificationRecord> counterexamples;
    std::vector<std::pair<std::size_t, std::string>> skipped_lines; // (line, reason)
    std::vector<std::pair<std::size_t, std::string>> error_lines;   // parse and unresolved
    std::map<int, OrderCensus> census;                              // keyed by n
    double wall_time_ms = 0;

    /// Zero counterexamples, zero unresolved records, zero Claim 1 failures.
    bool clean() const noexcept
    {
        return counterexamples.empty() && unresolved == 0 && claim1_failed == 0;
    }
};

/// Verifies one graph at parameter k. `line` and `graph6` are carried into the record.
VerificationRecord verify_graph(const Graph& g, const VerifyOptions& options, std::size_t line = 0,
                                std::string graph6 = {});

/// Reads graph6 lines (blank lines and ">>graph6<<"-only lines ignored), solves
/// them on `options.workers` threads and hands records to `sink` in input order.
VerifySummary verify_stream(std::istream& in, const VerifyOptions& options,
                            const std::function<void(const VerificationRecord&)>& sink = {});

/// CSV: n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms
void write_summary_csv(std::ostream& out, const VerifySummary& summary);

struct Claim1Result {
    bool applicable = false; // Δ >= 3 and the graph meets the equality
    bool found_set = false;  // a minimum set with nonempty connected complement exists
    int zero_forcing_number = 0;
    VertexSet s;
    bool size_is_minimum = false;    // |S| == Z(G)
    bool one_outside_neighbor = false;
    bool complement_is_tree = false;
    int boundary = 0;                // e(S, V \ S)
    bool boundary_at_least_size = false;
    std::string note;

    bool ok() const noexcept
    {
        return applicable && found_set && size_is_minimum && one_outside_neighbor && complement_is_tree &&
               boundary_at_least_size;
    }
};

/// Structural check on an extremal graph: the smallest zero forcing set S with
/// connected complement has every vertex of S with exactly one neighbour
/// outside S, V \ S induces a tree, and e(S, V \ S) >= |S|.
Claim1Result check_claim1(const Graph& g, const SolveLimits& limits = {});

/// Every vertex outside d has at least k neighbours in d.
bool is_k_dominating(const Graph& g, const VertexSet& d, int k);

enum class ComplementOutcome { NotApplicable, Absent, Pass, Fail };

struct DominatingComplementResult {
    ComplementOutcome outcome = ComplementOutcome::NotApplicable;
    std::size_t minima = 0;         // minimum connected-complement forcing sets examined
    std::vector<VertexSet> failing; // those whose complement is not k-dominating
};

/// Check on a k-connected graph with n > k: for every minimum k-forcing
/// set S with connected V \ S, V \ S is a connected k-dominating set.
DominatingComplementResult check_dominating_complement(const Graph& g, int k, const SolveLimits& limits = {});

struct TreeLemmaSummary {
    std::size_t trees = 0;
    std::size_t subsets = 0;
    std::size_t failures = 0;
    std::size_t rejected = 0; // inputs that were not trees
    std::vector<std::string> failing_graph6;
};

/// For each tree with leaf set L, checks that every (|L|-1)-subset of L is a
/// zero forcing set. Non-tree inputs are counted as rejected.
void check_tree_lemma(const Graph& tree, TreeLemmaSummary& summary);
TreeLemmaSummary run_tree_lemma(const std::vector<Graph>& trees);

/// Exhaustive over Prüfer sequences for 2 <= n <= max_n, then `random_count`
/// seeded random trees with orders uniform in [random_min_n, random_max_n].
TreeLemmaSummary run_tree_suite(int max_n, std::size_t random_count, int random_min_n, int random_max_n,
                                std::uint64_t seed);

struct KnownValue {
    std::string family;
    int expected = 0;
    int computed = 0;
    bool ok() const noexcept { return expected == computed; }
};

/// Z(C_n) = 2 for n = 3..12, and Z(K_{Δ+1}) = Δ, Z(K_{Δ,Δ}) = 2Δ-2 for
/// Δ = 2..delta_max, each by the exact solver.
std::vector<KnownValue> run_known_values(int delta_max, const SolveLimits& limits = {});

} // namespace forcing
