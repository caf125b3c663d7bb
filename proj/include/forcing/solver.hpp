#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

enum class Method { Oracle, BranchAndBound, Greedy };

enum class SolveStatus {
    Optimal,   // value proven minimum
    Heuristic, // greedy upper bound, not proven minimum
    Aborted,   // budget exhausted; value is only an upper bound
};

/// Outcome of the connected-complement restriction.
enum class ComplementStatus {
    NotApplicable, // unconstrained solve
    Connected,     // V \ witness is nonempty and induces a connected subgraph
    EmptyOnly,     // no candidate with nonempty connected complement; witness is V
};

struct SolveLimits {
    std::uint64_t node_budget = 100'000'000;
    std::chrono::milliseconds time_budget{0}; // zero means unlimited
};

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::Oracle;
    SolveStatus status = SolveStatus::Optimal;
    bool constrained = false;
    ComplementStatus complement = ComplementStatus::NotApplicable;

    bool optimal() const noexcept { return status == SolveStatus::Optimal; }
};

/// Tries every subset in order of size, lexicographically within a size.
/// The first forcing set is the lexicographically smallest minimum one.
SolveResult brute_force_oracle(const Graph& g, int k, const SolveLimits& limits = {});

/// Exact F_k(g) by cardinality-ascending search capped by the greedy bound.
/// Never branches on a vertex already inside the closure of the partial set,
/// which keeps every minimum forcing set reachable, so the witness matches the
/// oracle's.
SolveResult solve(const Graph& g, int k, const SolveLimits& limits = {});

/// Repeatedly colors the vertex with the largest closure gain (ties to the
/// smallest id). Always a valid forcing set; value >= F_k(g).
SolveResult greedy_upper_bound(const Graph& g, int k);

/// Minimum k-forcing set whose complement induces a nonempty connected
/// subgraph; ComplementStatus::EmptyOnly when only V itself qualifies.
SolveResult solve_connected_complement(const Graph& g, int k, const SolveLimits& limits = {});

/// Every forcing set of minimum size among those with nonempty connected
/// complement, in lexicographic order. Empty if none exists.
std::vector<VertexSet> connected_complement_minima(const Graph& g, int k, const SolveLimits& limits = {});

/// Thrown by connected_complement_minima when the budget runs out.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(Method m);
std::string to_string(SolveStatus s);
std::string to_string(ComplementStatus s);

} // namespace forcing
