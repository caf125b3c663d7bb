#include "forcing/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace forcing {

Rational amos_bound(int n, int max_degree, int k)
{
    if (max_degree < 2)
        throw std::invalid_argument("amos_bound needs maximum degree >= 2");
    if (k < 1)
        throw std::invalid_argument("amos_bound needs k >= 1");
    return {static_cast<std::int64_t>(max_degree - 2) * n + 2, max_degree + k - 2};
}

Rational caro_pepper_bound(int n, int max_degree, int min_degree)
{
    if (max_degree < 2)
        throw std::invalid_argument("caro_pepper_bound needs maximum degree >= 2");
    if (min_degree < 1 || min_degree > max_degree)
        throw std::invalid_argument("caro_pepper_bound needs 1 <= min degree <= max degree");
    return {static_cast<std::int64_t>(max_degree - 2) * n - (max_degree - min_degree) + 2, max_degree - 1};
}

bool check_amos_equality(std::int64_t z, int n, int max_degree)
{
    if (max_degree < 2)
        throw std::invalid_argument("check_amos_equality needs maximum degree >= 2");
    return z * (max_degree - 1) == static_cast<std::int64_t>(max_degree - 2) * n + 2;
}

BoundReport bound_report(const Graph& g, int k, std::int64_t forcing_number)
{
    const auto stats = degree_stats(g);
    BoundReport r;
    r.n = g.order();
    r.max_degree = stats.max_degree;
    r.min_degree = stats.min_degree;
    r.k = k;
    r.amos = amos_bound(r.n, r.max_degree, k);
    r.caro_pepper = caro_pepper_bound(r.n, r.max_degree, std::max(r.min_degree, 1));
    r.meets_amos_equality = r.amos.equals(forcing_number);
    return r;
}

ExtremalClass classify_extremal(const Graph& g)
{
    if (!is_connected(g))
        throw std::invalid_argument("classify_extremal needs a connected graph");
    const int n = g.order();
    const auto stats = degree_stats(g);
    const int delta = stats.max_degree;
    const bool regular = stats.min_degree == delta;
    if (!regular || delta < 2)
        return {};
    if (delta == n - 1)
        return {ExtremalTag::Complete, n};
    // A connected Δ-regular bipartite graph on 2Δ vertices has parts of size Δ
    // and Δ² = |E| edges, so every cross pair is adjacent.
    if (n == 2 * delta && is_bipartite(g))
        return {ExtremalTag::BalancedCompleteBipartite, delta};
    if (delta == 2)
        return {ExtremalTag::Cycle, n};
    return {};
}

std::string to_string(ExtremalTag tag)
{
    switch (tag) {
    case ExtremalTag::None:
        return "None";
    case ExtremalTag::Cycle:
        return "Cycle";
    case ExtremalTag::Complete:
        return "Complete";
    case ExtremalTag::BalancedCompleteBipartite:
        return "BalancedCompleteBipartite";
    }
    return "None";
}

std::string to_string(const ExtremalClass& c)
{
    switch (c.tag) {
    case ExtremalTag::None:
        return "none";
    case ExtremalTag::Cycle:
        return "C_" + std::to_string(c.parameter);
    case ExtremalTag::Complete:
        return "K_" + std::to_string(c.parameter);
    case ExtremalTag::BalancedCompleteBipartite:
        return "K_" + std::to_string(c.parameter) + "," + std::to_string(c.parameter);
    }
    return "none";
}

} // namespace forcing
