#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

constexpr int kMaxEnumerationOrder = 7;
constexpr int kMaxCanonicalOrder = 11; // n(n-1)/2 <= 64 bits

/// Isomorphism-invariant code of g: the minimum, over all labelings reached by
/// degree refinement plus individualisation, of the upper-triangle adjacency
/// bits read in graph6 order. Two graphs of equal order are isomorphic iff
/// their codes are equal. Requires n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The graph whose adjacency bits (graph6 order) are `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), each in its canonical labelling, ordered by code.
/// Larger n throws std::out_of_range; use a graph6 file from an external
/// generator instead.
std::vector<Graph> enumerate_connected(int n);

} // namespace forcing
