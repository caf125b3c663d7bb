#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Named families. All throw std::invalid_argument on out-of-range parameters.

Graph cycle(int m);                       // m >= 3
Graph complete(int n);                    // n >= 1
Graph complete_bipartite(int a, int b);   // a, b >= 1; parts {0..a-1}, {a..a+b-1}
Graph path(int n);                        // n >= 1
Graph star(int leaves);                   // K_{1,leaves}, centre 0; leaves >= 1
Graph petersen();

/// Decodes a Prüfer sequence of length n-2 over {0..n-1} into a labelled tree
/// on n vertices. An empty sequence yields the single edge on 2 vertices.
Graph tree_from_pruefer(std::span<const int> sequence);

/// Inline family spec "name:params", e.g. "cycle:5", "complete_bipartite:3,3",
/// "tree_from_pruefer:0,0", "petersen".
Graph generate(std::string_view spec);

/// Calls `visit` with every Prüfer sequence of length n-2 (n >= 2), in
/// lexicographic order. Stops early when `visit` returns false.
void for_each_pruefer(int n, const std::function<bool(std::span<const int>)>& visit);

std::vector<int> random_pruefer(int n, std::mt19937_64& rng);

} // namespace forcing
