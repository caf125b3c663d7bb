#pragma once

#include <cstdint>
#include <string>

#include "forcing/graph.hpp"

namespace forcing {

/// Unreduced fraction num/den with den > 0. Comparisons cross-multiply.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// value <= num/den, exactly.
    bool bounds_from_above(std::int64_t value) const noexcept { return value * den <= num; }
    bool equals(std::int64_t value) const noexcept { return value * den == num; }

    friend bool operator==(const Rational& a, const Rational& b) noexcept
    {
        return a.num * b.den == b.num * a.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) noexcept
    {
        return a.num * b.den < b.num * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) noexcept { return !(b < a); }

    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// ((Δ-2)n+2)/(Δ+k-2), the k-forcing upper bound for k-connected graphs.
/// Throws std::invalid_argument for Δ < 2 or k < 1.
Rational amos_bound(int n, int max_degree, int k);

/// ((Δ-2)n-(Δ-δ)+2)/(Δ-1), the zero forcing bound using the minimum degree.
/// Throws std::invalid_argument unless Δ >= 2 and 1 <= δ <= Δ.
Rational caro_pepper_bound(int n, int max_degree, int min_degree);

/// Z·(Δ-1) == (Δ-2)n + 2.
bool check_amos_equality(std::int64_t z, int n, int max_degree);

struct BoundReport {
    int n = 0;
    int max_degree = 0;
    int min_degree = 0;
    int k = 1;
    Rational amos;
    Rational caro_pepper;
    bool meets_amos_equality = false;
};

/// Bounds for g at parameter k, with the equality flag evaluated at `forcing_number`.
BoundReport bound_report(const Graph& g, int k, std::int64_t forcing_number);

enum class ExtremalTag { None, Cycle, Complete, BalancedCompleteBipartite };

struct ExtremalClass {
    ExtremalTag tag = ExtremalTag::None;
    int parameter = 0; // n for Cycle and Complete, Δ for BalancedCompleteBipartite

    friend bool operator==(const ExtremalClass&, const ExtremalClass&) = default;
};

/// Structural test for C_n, K_{Δ+1} and K_{Δ,Δ}. Overlaps resolve in the
/// order Complete > BalancedCompleteBipartite > Cycle, so K_3 is Complete and
/// C_4 is BalancedCompleteBipartite. Throws std::invalid_argument for
/// disconnected input.
ExtremalClass classify_extremal(const Graph& g);

std::string to_string(ExtremalTag tag);
std::string to_string(const ExtremalClass& c); // e.g. "K_4", "K_3,3", "C_7", "none"

} // namespace forcing
