#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "forcing/vertex_set.hpp"

namespace forcing {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
///
/// Adjacency is stored as one bitmask per vertex so neighbourhoods can be
/// intersected with VertexSet packings directly.
class Graph {
public:
    static constexpr int kMaxOrder = VertexSet::kMaxCapacity;

    Graph() = default;

    /// Throws std::invalid_argument on loops, out-of-range ids or n > 64.
    /// Duplicate edges are merged.
    Graph(int n, const std::vector<Edge>& edges, std::string name = {});

    static Graph from_masks(std::vector<std::uint64_t> masks, std::string name = {});

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }
    const std::string& name() const noexcept { return name_; }
    Graph renamed(std::string name) const;

    bool adjacent(Vertex u, Vertex v) const noexcept { return ((adj_[u] >> v) & 1U) != 0; }
    std::uint64_t neighbor_bits(Vertex v) const noexcept { return adj_[v]; }
    VertexSet neighbors(Vertex v) const { return VertexSet::from_bits(n_, adj_[v]); }
    int degree(Vertex v) const noexcept;

    VertexSet vertices() const { return VertexSet::full(n_); }
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
    std::string name_;
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> sequence; // indexed by vertex id
};

/// Requires n >= 1.
DegreeStats degree_stats(const Graph& g);

bool is_connected(const Graph& g);

/// True iff the subgraph induced by `s` is connected. The empty set is not.
bool induces_connected(const Graph& g, const VertexSet& s);

/// Number of edges with both endpoints in `s`.
int induced_edge_count(const Graph& g, const VertexSet& s);

/// True iff n > k and no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k);

/// Number of edges with exactly one endpoint in `s`.
int edge_boundary(const Graph& g, const VertexSet& s);

bool is_bipartite(const Graph& g);

int triangle_count(const Graph& g);

/// Input error carrying the byte offset (or line number for edge lists).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset)
    {
    }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace forcing
