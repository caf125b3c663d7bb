#include "forcing/families.hpp"

#include <charconv>
#include <queue>

namespace forcing {

namespace {

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

std::vector<int> parse_int_list(std::string_view text, std::string_view family)
{
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
            throw std::invalid_argument("family " + std::string(family) + ": bad integer '" +
                                        std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

} // namespace

Graph cycle(int m)
{
    require(m >= 3 && m <= Graph::kMaxOrder, "cycle needs 3 <= m <= 64");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        edges.emplace_back(i, (i + 1) % m);
    return Graph(m, edges, "C_" + std::to_string(m));
}

Graph complete(int n)
{
    require(n >= 1 && n <= Graph::kMaxOrder, "complete needs 1 <= n <= 64");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges, "K_" + std::to_string(n));
}

Graph complete_bipartite(int a, int b)
{
    require(a >= 1 && b >= 1 && a + b <= Graph::kMaxOrder, "complete_bipartite needs a, b >= 1 and a + b <= 64");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v)
            edges.emplace_back(u, v);
    return Graph(a + b, edges, "K_" + std::to_string(a) + "," + std::to_string(b));
}

Graph path(int n)
{
    require(n >= 1 && n <= Graph::kMaxOrder, "path needs 1 <= n <= 64");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges, "P_" + std::to_string(n));
}

Graph star(int leaves)
{
    require(leaves >= 1 && leaves < Graph::kMaxOrder, "star needs 1 <= leaves <= 63");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v)
        edges.emplace_back(0, v);
    return Graph(leaves + 1, edges, "K_1," + std::to_string(leaves));
}

Graph petersen()
{
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);         // outer 5-cycle
        edges.emplace_back(i, i + 5);               // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, edges, "Petersen");
}

Graph tree_from_pruefer(std::span<const int> sequence)
{
    const int n = static_cast<int>(sequence.size()) + 2;
    require(n <= Graph::kMaxOrder, "Pruefer sequence too long");
    std::vector<int> remaining_degree(static_cast<std::size_t>(n), 1);
    for (int x : sequence) {
        require(x >= 0 && x < n, "Pruefer entry " + std::to_string(x) + " outside [0, " + std::to_string(n) + ")");
        ++remaining_degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (remaining_degree[v] == 1)
            leaves.push(v);
    std::vector<Edge> edges;
    for (int x : sequence) {
        const int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, x);
        if (--remaining_degree[x] == 1)
            leaves.push(x);
    }
    const int u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return Graph(n, edges);
}

Graph generate(std::string_view spec)
{
    const std::size_t colon = spec.find(':');
    const std::string_view family = spec.substr(0, colon);
    const std::string_view params = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
    const auto args = parse_int_list(params, family);
    auto expect = [&](std::size_t count) {
        require(args.size() == count, "family " + std::string(family) + " takes " + std::to_string(count) +
                                          " parameter(s), got " + std::to_string(args.size()));
    };

    if (family == "cycle") {
        expect(1);
        return cycle(args[0]);
    }
    if (family == "complete") {
        expect(1);
        return complete(args[0]);
    }
    if (family == "complete_bipartite") {
        expect(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (family == "path") {
        expect(1);
        return path(args[0]);
    }
    if (family == "star") {
        expect(1);
        return star(args[0]);
    }
    if (family == "petersen") {
        expect(0);
        return petersen();
    }
    if (family == "tree_from_pruefer")
        return tree_from_pruefer(args);
    throw std::invalid_argument("unknown family '" + std::string(family) + "'");
}

void for_each_pruefer(int n, const std::function<bool(std::span<const int>)>& visit)
{
    require(n >= 2 && n <= Graph::kMaxOrder, "Pruefer enumeration needs 2 <= n <= 64");
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        if (!visit(seq))
            return;
        // odometer increment, last position fastest
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1)
            seq[i--] = 0;
        if (i < 0)
            return;
        ++seq[i];
    }
}

std::vector<int> random_pruefer(int n, std::mt19937_64& rng)
{
    require(n >= 2 && n <= Graph::kMaxOrder, "random tree needs 2 <= n <= 64");
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq)
        x = pick(rng);
    return seq;
}

} // namespace forcing
