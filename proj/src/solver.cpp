#include "forcing/solver.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "forcing/engine.hpp"

namespace forcing {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
public:
    explicit Budget(const SolveLimits& limits) : limits_(limits), start_(Clock::now()) {}

    /// Counts one node; false once a limit is hit.
    bool tick()
    {
        ++nodes_;
        if (nodes_ > limits_.node_budget)
            exhausted_ = true;
        else if (limits_.time_budget.count() > 0 && (nodes_ & 0xFFF) == 0 &&
                 Clock::now() - start_ > limits_.time_budget)
            exhausted_ = true;
        return !exhausted_;
    }

    std::uint64_t nodes() const noexcept { return nodes_; }
    bool exhausted() const noexcept { return exhausted_; }

private:
    SolveLimits limits_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

void require_nonempty(const Graph& g, int k)
{
    if (g.order() < 1)
        throw std::invalid_argument("solver needs a graph with at least one vertex");
    if (k < 1)
        throw std::invalid_argument("forcing parameter k must be >= 1");
}

// Visits the size-`size` subsets of {0..n-1} in lexicographic order until
// `visit` returns true (found) or the budget runs out.
bool for_each_combination(int n, int size, Budget& budget, const std::function<bool(std::uint64_t)>& visit)
{
    std::vector<int> idx(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    while (true) {
        if (!budget.tick())
            return false;
        std::uint64_t mask = 0;
        for (int v : idx)
            mask |= std::uint64_t{1} << v;
        if (visit(mask))
            return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

SolveResult full_set_result(const Graph& g, Method method, SolveStatus status, std::uint64_t nodes)
{
    SolveResult r;
    r.value = g.order();
    r.witness = g.vertices();
    r.method = method;
    r.status = status;
    r.nodes_explored = nodes;
    return r;
}

class BranchAndBound {
public:
    BranchAndBound(const Graph& g, int k, Budget& budget)
        : g_(g), k_(k), budget_(budget), all_(g.vertices().bits())
    {
    }

    /// Searches for a forcing set of exactly `size` vertices.
    bool run(int size)
    {
        return extend(0, size, 0, 0);
    }

    std::uint64_t witness() const noexcept { return found_; }

private:
    bool extend(int start, int remaining, std::uint64_t picked, std::uint64_t colored)
    {
        if (!budget_.tick())
            return false;
        if (remaining == 0) {
            if (colored != all_)
                return false;
            found_ = picked;
            return true;
        }
        // vertices already colored are never useful picks
        const std::uint64_t from_start = start >= 64 ? 0 : ~std::uint64_t{0} << start;
        const std::uint64_t candidates = ~colored & all_ & from_start;
        if (std::popcount(candidates) < remaining)
            return false;
        for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
            const Vertex v = std::countr_zero(b);
            const std::uint64_t next = closure_mask(g_, k_, colored | (std::uint64_t{1} << v));
            if (remaining == 1) {
                if (!budget_.tick())
                    return false;
                if (next == all_) {
                    found_ = picked | (std::uint64_t{1} << v);
                    return true;
                }
                continue;
            }
            if (extend(v + 1, remaining - 1, picked | (std::uint64_t{1} << v), next))
                return true;
            if (budget_.exhausted())
                return false;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    Budget& budget_;
    std::uint64_t all_;
    std::uint64_t found_ = 0;
};

} // namespace

SolveResult brute_force_oracle(const Graph& g, int k, const SolveLimits& limits)
{
    require_nonempty(g, k);
    Budget budget(limits);
    const int n = g.order();
    const std::uint64_t all = g.vertices().bits();
    for (int size = 1; size <= n; ++size) {
        std::uint64_t hit = 0;
        const bool found = for_each_combination(n, size, budget, [&](std::uint64_t mask) {
            if (closure_mask(g, k, mask) != all)
                return false;
            hit = mask;
            return true;
        });
        if (found) {
            SolveResult r;
            r.value = size;
            r.witness = VertexSet::from_bits(n, hit);
            r.method = Method::Oracle;
            r.nodes_explored = budget.nodes();
            return r;
        }
        if (budget.exhausted())
            return full_set_result(g, Method::Oracle, SolveStatus::Aborted, budget.nodes());
    }
    throw std::logic_error("vertex set failed to force itself");
}

SolveResult greedy_upper_bound(const Graph& g, int k)
{
    require_nonempty(g, k);
    const std::uint64_t all = g.vertices().bits();
    std::uint64_t picked = 0;
    std::uint64_t colored = closure_mask(g, k, 0);
    std::uint64_t evaluations = 0;
    while (colored != all) {
        Vertex best = -1;
        std::uint64_t best_closure = 0;
        for (std::uint64_t b = ~colored & all; b != 0; b &= b - 1) {
            const Vertex v = std::countr_zero(b);
            const std::uint64_t c = closure_mask(g, k, colored | (std::uint64_t{1} << v));
            ++evaluations;
            if (best < 0 || std::popcount(c) > std::popcount(best_closure)) {
                best = v;
                best_closure = c;
            }
        }
        picked |= std::uint64_t{1} << best;
        colored = best_closure;
    }
    SolveResult r;
    r.value = std::popcount(picked);
    r.witness = VertexSet::from_bits(g.order(), picked);
    r.method = Method::Greedy;
    r.status = SolveStatus::Heuristic;
    r.nodes_explored = evaluations;
    return r;
}

SolveResult solve(const Graph& g, int k, const SolveLimits& limits)
{
    require_nonempty(g, k);
    const SolveResult upper = greedy_upper_bound(g, k);
    Budget budget(limits);
    BranchAndBound search(g, k, budget);
    // The greedy set proves a forcing set of size upper.value exists, so the
    // loop always terminates with a hit unless the budget runs out.
    for (int size = 1; size <= upper.value; ++size) {
        if (search.run(size)) {
            SolveResult r;
            r.value = size;
            r.witness = VertexSet::from_bits(g.order(), search.witness());
            r.method = Method::BranchAndBound;
            r.nodes_explored = budget.nodes();
            return r;
        }
        if (budget.exhausted()) {
            SolveResult r = upper;
            r.method = Method::BranchAndBound;
            r.status = SolveStatus::Aborted;
            r.nodes_explored = budget.nodes();
            return r;
        }
    }
    throw std::logic_error("branch and bound missed the greedy forcing set");
}

namespace {

bool complement_ok(const Graph& g, std::uint64_t mask)
{
    const VertexSet rest = VertexSet::from_bits(g.order(), mask).complement();
    return induces_connected(g, rest);
}

} // namespace

SolveResult solve_connected_complement(const Graph& g, int k, const SolveLimits& limits)
{
    require_nonempty(g, k);
    Budget budget(limits);
    const int n = g.order();
    const std::uint64_t all = g.vertices().bits();
    for (int size = 1; size < n; ++size) {
        std::uint64_t hit = 0;
        const bool found = for_each_combination(n, size, budget, [&](std::uint64_t mask) {
            if (!complement_ok(g, mask) || closure_mask(g, k, mask) != all)
                return false;
            hit = mask;
            return true;
        });
        if (found) {
            SolveResult r;
            r.value = size;
            r.witness = VertexSet::from_bits(n, hit);
            r.method = Method::Oracle;
            r.constrained = true;
            r.complement = ComplementStatus::Connected;
            r.nodes_explored = budget.nodes();
            return r;
        }
        if (budget.exhausted()) {
            SolveResult r = full_set_result(g, Method::Oracle, SolveStatus::Aborted, budget.nodes());
            r.constrained = true;
            r.complement = ComplementStatus::EmptyOnly;
            return r;
        }
    }
    SolveResult r = full_set_result(g, Method::Oracle, SolveStatus::Optimal, budget.nodes());
    r.constrained = true;
    r.complement = ComplementStatus::EmptyOnly;
    return r;
}

std::vector<VertexSet> connected_complement_minima(const Graph& g, int k, const SolveLimits& limits)
{
    require_nonempty(g, k);
    Budget budget(limits);
    const int n = g.order();
    const std::uint64_t all = g.vertices().bits();
    std::vector<VertexSet> out;
    for (int size = 1; size < n && out.empty(); ++size) {
        for_each_combination(n, size, budget, [&](std::uint64_t mask) {
            if (complement_ok(g, mask) && closure_mask(g, k, mask) == all)
                out.push_back(VertexSet::from_bits(n, mask));
            return false;
        });
        if (budget.exhausted())
            throw BudgetExceeded("connected-complement enumeration exceeded its node budget");
    }
    return out;
}

std::string to_string(Method m)
{
    switch (m) {
    case Method::Oracle:
        return "oracle";
    case Method::BranchAndBound:
        return "bnb";
    case Method::Greedy:
        return "greedy";
    }
    return "unknown";
}

std::string to_string(SolveStatus s)
{
    switch (s) {
    case SolveStatus::Optimal:
        return "optimal";
    case SolveStatus::Heuristic:
        return "heuristic";
    case SolveStatus::Aborted:
        return "aborted";
    }
    return "unknown";
}

std::string to_string(ComplementStatus s)
{
    switch (s) {
    case ComplementStatus::NotApplicable:
        return "n/a";
    case ComplementStatus::Connected:
        return "connected";
    case ComplementStatus::EmptyOnly:
        return "empty_only";
    }
    return "unknown";
}

} // namespace forcing
