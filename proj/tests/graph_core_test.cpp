#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "forcing/enumerate.hpp"
#include "forcing/families.hpp"
#include "forcing/graph.hpp"
#include "forcing/graph_io.hpp"
#include "support/oracles.hpp"

namespace forcing {
namespace {

using testing::brute_canonical;
using testing::brute_connectivity;
using testing::random_graph;
using testing::relabel;

TEST(Graph6, HandEncodedTriangleAndPath)
{
    // K_3: bits x01,x02,x12 = 111 -> 111000b = 56, +63 = 'w'
    const Graph k3 = parse_graph6("Bw");
    EXPECT_EQ(k3.order(), 3);
    EXPECT_EQ(k3.size(), 3);
    EXPECT_EQ(k3, complete(3));

    // P_3 0-1-2: bits 1,0,1 -> 101000b = 40, +63 = 'g'
    const Graph p3 = parse_graph6("Bg");
    EXPECT_EQ(p3, path(3));
    EXPECT_EQ(encode_graph6(complete(3)), "Bw");
}

TEST(Graph6, SingleVertex)
{
    const Graph g = parse_graph6("@");
    EXPECT_EQ(g.order(), 1);
    EXPECT_EQ(g.size(), 0);
    EXPECT_EQ(encode_graph6(g), "@");
}

TEST(Graph6, FourCycle)
{
    // x01,x02,x12,x03,x13,x23 = 1,0,1,1,0,1 -> 45 + 63 = 'l'
    EXPECT_EQ(encode_graph6(cycle(4)), "Cl");
    EXPECT_EQ(parse_graph6("Cl"), cycle(4));
}

TEST(Graph6, HeaderAndNewlineTolerated)
{
    EXPECT_EQ(parse_graph6(">>graph6<<Bw\n"), complete(3));
    EXPECT_EQ(parse_graph6("Bw\r\n"), complete(3));
}

TEST(Graph6, ErrorsNameTheOffset)
{
    auto offset_of = [](std::string_view text) -> std::size_t {
        try {
            parse_graph6(text);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return std::string::npos;
    };
    EXPECT_EQ(offset_of(""), 0U);
    EXPECT_EQ(offset_of(" w"), 0U);     // size byte below '?'
    EXPECT_EQ(offset_of("Bw?"), 2U);    // trailing byte
    EXPECT_EQ(offset_of("C\x01"), 1U);  // non-printable payload
    EXPECT_EQ(offset_of("Bx"), 1U);     // nonzero padding
    EXPECT_EQ(offset_of("D"), 1U);      // truncated payload
}

TEST(Graph6, LongSizeForm)
{
    const Graph g = cycle(63);
    const std::string text = encode_graph6(g);
    EXPECT_EQ(text.substr(0, 4), "~??~");
    EXPECT_EQ(parse_graph6(text), g);
}

TEST(Graph6, RoundTripProperty)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(0, 20)(rng);
        const Graph g = random_graph(n, 0.4, rng);
        EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
    }
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected(n))
            EXPECT_EQ(parse_graph6(encode_graph6(g)), g);
}

TEST(EdgeList, ParsesAndRejects)
{
    std::istringstream ok("4 4\n0 1\n1 2\n2 3\n3 0\n");
    EXPECT_EQ(parse_edge_list(ok), cycle(4));

    std::istringstream loop("2 1\n1 1\n");
    EXPECT_THROW(parse_edge_list(loop), ParseError);
    std::istringstream short_list("3 2\n0 1\n");
    EXPECT_THROW(parse_edge_list(short_list), ParseError);

    std::istringstream round(encode_edge_list(petersen()));
    EXPECT_EQ(parse_edge_list(round), petersen());
}

TEST(Families, Counts)
{
    const Graph c5 = cycle(5);
    EXPECT_EQ(c5.order(), 5);
    EXPECT_EQ(c5.size(), 5);
    EXPECT_EQ(degree_stats(c5).max_degree, 2);
    EXPECT_EQ(degree_stats(c5).min_degree, 2);

    const Graph k33 = complete_bipartite(3, 3);
    EXPECT_EQ(k33.order(), 6);
    EXPECT_EQ(k33.size(), 9);
    EXPECT_EQ(degree_stats(k33).min_degree, 3);
    EXPECT_TRUE(is_bipartite(k33));

    for (int n = 1; n <= 12; ++n)
        EXPECT_EQ(complete(n).size(), n * (n - 1) / 2);
    EXPECT_EQ(complete_bipartite(2, 5).size(), 10);
}

TEST(Families, PrueferDecode)
{
    // [0,0]: leaves 1 and 2 attach to 0 in turn, then the last edge is 0-3
    const std::vector<int> seq{0, 0};
    const Graph t = tree_from_pruefer(seq);
    EXPECT_EQ(t, star(3));
    EXPECT_EQ(generate("tree_from_pruefer:0,0"), star(3));
    EXPECT_EQ(tree_from_pruefer(std::vector<int>{}), path(2));
}

TEST(Families, PrueferCountsMatchCayley)
{
    for (int n = 2; n <= 6; ++n) {
        std::set<std::vector<Edge>> trees;
        std::size_t count = 0;
        for_each_pruefer(n, [&](std::span<const int> seq) {
            const Graph t = tree_from_pruefer(seq);
            EXPECT_EQ(t.size(), n - 1);
            EXPECT_TRUE(is_connected(t));
            trees.insert(t.edges());
            ++count;
            return true;
        });
        std::size_t cayley = 1;
        for (int i = 0; i < n - 2; ++i)
            cayley *= static_cast<std::size_t>(n);
        EXPECT_EQ(count, cayley);
        EXPECT_EQ(trees.size(), cayley); // the decode is a bijection
    }
}

TEST(Families, SpecParsingErrors)
{
    EXPECT_EQ(generate("cycle:5"), cycle(5));
    EXPECT_EQ(generate("complete_bipartite:3,3"), complete_bipartite(3, 3));
    EXPECT_THROW(generate("cycle:2"), std::invalid_argument);
    EXPECT_THROW(generate("complete:0"), std::invalid_argument);
    EXPECT_THROW(generate("complete_bipartite:3"), std::invalid_argument);
    EXPECT_THROW(generate("cycle:x"), std::invalid_argument);
    EXPECT_THROW(generate("wheel:5"), std::invalid_argument);
    EXPECT_THROW(generate("tree_from_pruefer:0,7"), std::invalid_argument);
}

TEST(DegreeStats, Examples)
{
    const auto p = degree_stats(petersen());
    EXPECT_EQ(p.max_degree, 3);
    EXPECT_EQ(p.min_degree, 3);
    const auto s = degree_stats(star(3));
    EXPECT_EQ(s.max_degree, 3);
    EXPECT_EQ(s.min_degree, 1);
    EXPECT_EQ(s.sequence, (std::vector<int>{3, 1, 1, 1}));
    const auto k5 = degree_stats(complete(5));
    EXPECT_EQ(k5.max_degree, 4);
    EXPECT_EQ(k5.min_degree, 4);
    EXPECT_THROW(degree_stats(Graph(0, {})), std::invalid_argument);
}

TEST(Connectivity, Examples)
{
    EXPECT_TRUE(is_connected(cycle(5)));
    EXPECT_TRUE(is_k_connected(cycle(5), 2));
    EXPECT_FALSE(is_k_connected(cycle(5), 3));
    EXPECT_TRUE(is_connected(path(3)));
    EXPECT_FALSE(is_k_connected(path(3), 2));
    EXPECT_TRUE(is_k_connected(complete(4), 3));
    EXPECT_FALSE(is_k_connected(complete(4), 4)); // needs n > k
    EXPECT_FALSE(is_connected(Graph(2, {})));
}

TEST(Connectivity, MatchesBruteForceConnectivity)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const Graph g = random_graph(n, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
        const int kappa = brute_connectivity(g);
        for (int k = 1; k <= 4; ++k)
            EXPECT_EQ(is_k_connected(g, k), n > k && kappa >= k) << encode_graph6(g) << " k=" << k;
    }
}

TEST(EdgeBoundary, Examples)
{
    EXPECT_EQ(edge_boundary(complete(4), VertexSet(4, {0, 1})), 4);
    EXPECT_EQ(edge_boundary(petersen(), VertexSet(10)), 0);
    EXPECT_EQ(edge_boundary(cycle(6), VertexSet(6, {0, 1, 2})), 2);
}

TEST(EdgeBoundary, ComplementSymmetry)
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 12)(rng);
        const Graph g = random_graph(n, 0.5, rng);
        const VertexSet s = testing::random_subset(n, 0.5, rng);
        EXPECT_EQ(edge_boundary(g, s), edge_boundary(g, s.complement()));
    }
}

TEST(Families, StructuralInvariants)
{
    for (int n = 3; n <= 20; ++n) {
        const auto stats = degree_stats(cycle(n));
        EXPECT_EQ(stats.min_degree, 2);
        EXPECT_EQ(stats.max_degree, 2);
        EXPECT_TRUE(is_connected(cycle(n)));
    }
    for (int a = 1; a <= 6; ++a) {
        const Graph g = complete_bipartite(a, a);
        EXPECT_EQ(degree_stats(g).min_degree, a);
        EXPECT_EQ(degree_stats(g).max_degree, a);
        EXPECT_TRUE(is_bipartite(g));
    }
}

TEST(Canonical, InvariantUnderRelabeling)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        const Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_code(g), canonical_code(relabel(g, perm)));
    }
}

TEST(Canonical, SeparatesExactlyLikeFullPermutationMinimum)
{
    std::mt19937_64 rng(9);
    std::vector<Graph> sample;
    for (int trial = 0; trial < 250; ++trial)
        sample.push_back(random_graph(6, std::uniform_real_distribution<double>(0.2, 0.8)(rng), rng));
    std::vector<std::uint64_t> fast;
    std::vector<std::uint64_t> brute;
    for (const auto& g : sample) {
        fast.push_back(canonical_code(g));
        brute.push_back(brute_canonical(g));
    }
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            EXPECT_EQ(fast[i] == fast[j], brute[i] == brute[j]);
}

TEST(Enumerate, KnownCounts)
{
    const std::vector<std::size_t> expected{1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(enumerate_connected(n).size(), expected[n - 1]) << "n=" << n;
    EXPECT_THROW(enumerate_connected(8), std::out_of_range);
    EXPECT_THROW(enumerate_connected(0), std::out_of_range);
}

TEST(Enumerate, MatchesExternalGenerator)
{
    for (int n = 3; n <= 7; ++n) {
        std::set<std::uint64_t> ours;
        for (const auto& g : enumerate_connected(n))
            ours.insert(canonical_code(g));
        std::set<std::uint64_t> external;
        for (const auto& g : testing::connected_graphs(n))
            external.insert(canonical_code(g));
        EXPECT_EQ(ours, external) << "n=" << n;
    }
}

TEST(Enumerate, PairwiseNonIsomorphic)
{
    const auto graphs = enumerate_connected(6);
    std::set<std::uint64_t> codes;
    std::set<std::pair<std::vector<int>, int>> invariants;
    for (const auto& g : graphs) {
        EXPECT_TRUE(is_connected(g));
        codes.insert(brute_canonical(g));
        auto degrees = degree_stats(g).sequence;
        std::sort(degrees.begin(), degrees.end());
        invariants.emplace(std::move(degrees), triangle_count(g));
    }
    EXPECT_EQ(codes.size(), graphs.size());
    // the cheap invariant already separates most classes
    EXPECT_GT(invariants.size(), graphs.size() / 2);
}

} // namespace
} // namespace forcing
