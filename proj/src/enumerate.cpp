#include "forcing/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

namespace forcing {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

constexpr int pair_index(int i, int j)
{
    return j * (j - 1) / 2 + i;
}

// Splits cells by neighbour counts into other cells until equitable. The
// result depends only on the graph structure and the incoming cell order.
void refine(const Graph& g, Partition& cells)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
            std::uint64_t splitter = 0;
            for (Vertex v : cells[w])
                splitter |= std::uint64_t{1} << v;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (cells[c].size() < 2)
                    continue;
                std::vector<std::pair<int, Vertex>> keyed;
                for (Vertex v : cells[c])
                    keyed.emplace_back(std::popcount(g.neighbor_bits(v) & splitter), v);
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first)
                    continue;
                Partition pieces;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first)
                        pieces.emplace_back();
                    pieces.back().push_back(keyed[i].second);
                }
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t leaf_code(const Graph& g, const Partition& cells)
{
    std::uint64_t code = 0;
    const int n = static_cast<int>(cells.size());
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.adjacent(cells[i].front(), cells[j].front()))
                code |= std::uint64_t{1} << pair_index(i, j);
    return code;
}

void search(const Graph& g, Partition cells, std::uint64_t& best)
{
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
        best = std::min(best, leaf_code(g, cells));
        return;
    }
    const auto at = target - cells.begin();
    for (Vertex v : *target) {
        Partition child;
        child.reserve(cells.size() + 1);
        child.insert(child.end(), cells.begin(), cells.begin() + at);
        child.push_back({v});
        Cell rest;
        for (Vertex u : cells[at])
            if (u != v)
                rest.push_back(u);
        child.push_back(std::move(rest));
        child.insert(child.end(), cells.begin() + at + 1, cells.end());
        search(g, std::move(child), best);
    }
}

} // namespace

std::uint64_t canonical_code(const Graph& g)
{
    const int n = g.order();
    if (n > kMaxCanonicalOrder)
        throw std::out_of_range("canonical_code supports at most 11 vertices");
    if (n <= 1)
        return 0;
    Cell all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        all[v] = v;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    search(g, Partition{all}, best);
    return best;
}

Graph graph_from_code(int n, std::uint64_t code)
{
    if (n < 0 || n > kMaxCanonicalOrder)
        throw std::out_of_range("graph_from_code supports at most 11 vertices");
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> pair_index(i, j)) & 1U)
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

std::vector<Graph> enumerate_connected(int n)
{
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::out_of_range("enumerate_connected supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) +
                                "; supply a graph6 file from an external generator for larger orders");
    // All isomorphism classes (connected or not) of order m, grown one vertex
    // at a time: every graph on m vertices is some graph on m-1 vertices plus
    // a new last vertex, and appending that vertex only adds the high bits.
    std::set<std::uint64_t> level{0};
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        const int shift = pair_index(0, m - 1);
        for (std::uint64_t base : level)
            for (std::uint64_t attach = 0; attach < (std::uint64_t{1} << (m - 1)); ++attach)
                next.insert(canonical_code(graph_from_code(m, base | (attach << shift))));
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (std::uint64_t code : level) {
        Graph g = graph_from_code(n, code);
        if (is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace forcing
