#include "forcing/graph.hpp"

#include <algorithm>
#include <bit>

namespace forcing {

Graph::Graph(int n, const std::vector<Edge>& edges, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0), name_(std::move(name))
{
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
        if (u == v)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    for (auto mask : adj_)
        m_ += std::popcount(mask);
    m_ /= 2;
}

Graph Graph::from_masks(std::vector<std::uint64_t> masks, std::string name)
{
    const int n = static_cast<int>(masks.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const bool uv = ((masks[u] >> v) & 1U) != 0;
            const bool vu = ((masks[v] >> u) & 1U) != 0;
            if (uv != vu)
                throw std::invalid_argument("adjacency masks are not symmetric");
            if (uv)
                edges.emplace_back(u, v);
        }
    for (int u = 0; u < n; ++u)
        if ((masks[u] >> u) & 1U)
            throw std::invalid_argument("loop at vertex " + std::to_string(u));
    return Graph(n, edges, std::move(name));
}

Graph Graph::renamed(std::string name) const
{
    Graph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

int Graph::degree(Vertex v) const noexcept
{
    return std::popcount(adj_[v]);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const Graph& g)
{
    if (g.order() < 1)
        throw std::invalid_argument("degree_stats needs at least one vertex");
    DegreeStats stats;
    stats.sequence.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        stats.sequence.push_back(g.degree(v));
    auto [lo, hi] = std::minmax_element(stats.sequence.begin(), stats.sequence.end());
    stats.min_degree = *lo;
    stats.max_degree = *hi;
    return stats;
}

namespace {

// Vertices reachable from the lowest member of `within`, staying inside it.
std::uint64_t reach(const Graph& g, std::uint64_t within)
{
    if (within == 0)
        return 0;
    std::uint64_t seen = within & -within;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t b = frontier; b != 0; b &= b - 1)
            next |= g.neighbor_bits(std::countr_zero(b));
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

} // namespace

bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return false;
    const auto all = g.vertices().bits();
    return reach(g, all) == all;
}

bool induces_connected(const Graph& g, const VertexSet& s)
{
    return !s.empty() && reach(g, s.bits()) == s.bits();
}

int induced_edge_count(const Graph& g, const VertexSet& s)
{
    int twice = 0;
    for (Vertex v : s.members())
        twice += std::popcount(g.neighbor_bits(v) & s.bits());
    return twice / 2;
}

bool is_k_connected(const Graph& g, int k)
{
    if (k < 1)
        throw std::invalid_argument("connectivity parameter must be positive");
    const int n = g.order();
    if (n <= k)
        return false;
    const std::uint64_t all = g.vertices().bits();
    // Every removal set of size < k must leave a connected remainder. n > k
    // guarantees the remainder is nonempty.
    bool ok = true;
    auto visit = [&](auto&& self, int next, int remaining, std::uint64_t removed) -> void {
        if (!ok)
            return;
        const std::uint64_t rest = all & ~removed;
        if (reach(g, rest) != rest) {
            ok = false;
            return;
        }
        if (remaining == 0)
            return;
        for (int v = next; v < n && ok; ++v)
            self(self, v + 1, remaining - 1, removed | (std::uint64_t{1} << v));
    };
    visit(visit, 0, k - 1, 0);
    return ok;
}

int edge_boundary(const Graph& g, const VertexSet& s)
{
    const std::uint64_t outside = s.complement().bits();
    int count = 0;
    for (Vertex v : s.members())
        count += std::popcount(g.neighbor_bits(v) & outside);
    return count;
}

bool is_bipartite(const Graph& g)
{
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> stack;
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(u).members()) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    stack.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

int triangle_count(const Graph& g)
{
    int count = 0;
    for (auto [u, v] : g.edges()) {
        const std::uint64_t common = g.neighbor_bits(u) & g.neighbor_bits(v);
        // count each triangle once, from its two smallest vertices
        count += std::popcount(common & ~((std::uint64_t{2} << v) - 1));
    }
    return count;
}

} // namespace forcing
