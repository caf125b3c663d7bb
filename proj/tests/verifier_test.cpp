#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "forcing/enumerate.hpp"
#include "forcing/families.hpp"
#include "forcing/graph_io.hpp"
#include "forcing/verifier.hpp"

namespace forcing {
namespace {

std::string lines_of(const std::vector<Graph>& graphs)
{
    std::string text;
    for (const auto& g : graphs)
        text += encode_graph6(g) + "\n";
    return text;
}

std::set<std::uint64_t> extremal_codes(const VerifySummary& s, int n)
{
    std::set<std::uint64_t> out;
    for (const auto& g6 : s.census.at(n).extremal_graph6)
        out.insert(canonical_code(parse_graph6(g6)));
    return out;
}

TEST(VerifyStream, SingleTriangle)
{
    std::istringstream in("Bw\n");
    std::vector<VerificationRecord> records;
    const auto summary = verify_stream(in, {}, [&](const VerificationRecord& r) { records.push_back(r); });
    ASSERT_EQ(records.size(), 1U);
    EXPECT_TRUE(records[0].equality);
    EXPECT_EQ(records[0].extremal_class.tag, ExtremalTag::Complete);
    EXPECT_EQ(records[0].f_k, 2);
    EXPECT_EQ(records[0].status, RecordStatus::Ok);
    EXPECT_FALSE(records[0].claim1_ok.has_value()); // Δ = 2
    EXPECT_TRUE(summary.clean());
}

TEST(VerifyStream, ExtremalSetsForSixAndSeven)
{
    VerifyOptions options;
    options.workers = 2;
    std::istringstream six(lines_of(enumerate_connected(6)));
    const auto s6 = verify_stream(six, options);
    EXPECT_EQ(s6.processed, 112U);
    EXPECT_TRUE(s6.clean());
    EXPECT_EQ(extremal_codes(s6, 6), (std::set<std::uint64_t>{canonical_code(cycle(6)), canonical_code(complete(6)),
                                                               canonical_code(complete_bipartite(3, 3))}));
    EXPECT_EQ(s6.claim1_checked, 2U); // K_6 and K_3,3

    std::istringstream seven(lines_of(enumerate_connected(7)));
    const auto s7 = verify_stream(seven, options);
    EXPECT_EQ(s7.processed, 853U);
    EXPECT_TRUE(s7.clean());
    EXPECT_EQ(extremal_codes(s7, 7), (std::set<std::uint64_t>{canonical_code(cycle(7)), canonical_code(complete(7))}));
}

TEST(VerifyStream, RecordsIdenticalForAnyWorkerCount)
{
    const std::string input = lines_of(enumerate_connected(6));
    auto run = [&](int workers, std::size_t batch) {
        VerifyOptions options;
        options.workers = workers;
        options.batch = batch;
        std::istringstream in(input);
        std::string out;
        verify_stream(in, options, [&](const VerificationRecord& r) { out += to_json_line(r) + "\n"; });
        return out;
    };
    const std::string serial = run(1, 1024);
    EXPECT_EQ(run(4, 7), serial);
    EXPECT_EQ(run(3, 1024), serial);
}

TEST(VerifyStream, SkipsAndParseErrorsAreCountedNotDropped)
{
    // line 1: K_3, line 2: garbage, line 3: blank, line 4: P_2 (Δ = 1),
    // line 5: two isolated vertices
    std::istringstream in("Bw\nB!\n\nA_\nA?\n");
    std::vector<VerificationRecord> records;
    const auto s = verify_stream(in, {}, [&](const VerificationRecord& r) { records.push_back(r); });
    EXPECT_EQ(s.lines, 4U);
    EXPECT_EQ(s.processed, 1U);
    EXPECT_EQ(s.parse_errors, 1U);
    EXPECT_EQ(s.skipped, 2U);
    ASSERT_EQ(s.error_lines.size(), 1U);
    EXPECT_EQ(s.error_lines[0].first, 2U);
    ASSERT_EQ(s.skipped_lines.size(), 2U);
    EXPECT_EQ(s.skipped_lines[0].first, 4U);
    EXPECT_EQ(s.skipped_lines[1], (std::pair<std::size_t, std::string>{5U, "disconnected"}));
    ASSERT_EQ(records.size(), 4U);
    EXPECT_EQ(records[1].status, RecordStatus::ParseError);
    EXPECT_TRUE(s.clean());
}

TEST(VerifyStream, BudgetExhaustionIsUnresolved)
{
    VerifyOptions options;
    options.limits.node_budget = 3;
    std::istringstream in(encode_graph6(petersen()) + "\n");
    const auto s = verify_stream(in, options);
    EXPECT_EQ(s.unresolved, 1U);
    EXPECT_FALSE(s.clean());
}

TEST(VerifyStream, HigherKSkipsGraphsThatAreNotKConnected)
{
    VerifyOptions options;
    options.k = 2;
    std::istringstream in(encode_graph6(path(4)) + "\n" + encode_graph6(cycle(5)) + "\n");
    std::vector<VerificationRecord> records;
    const auto s = verify_stream(in, options, [&](const VerificationRecord& r) { records.push_back(r); });
    EXPECT_EQ(s.skipped, 1U);
    ASSERT_EQ(records.size(), 2U);
    EXPECT_EQ(records[1].f_k, 1);
    EXPECT_EQ(records[1].bound.num, 2);
    EXPECT_EQ(records[1].bound.den, 2);
}

TEST(VerifyStream, JsonAndCsvShape)
{
    std::istringstream in("Bw\nC~\n");
    const auto s = verify_stream(in, {});
    std::ostringstream csv;
    write_summary_csv(csv, s);
    const std::string text = csv.str();
    EXPECT_EQ(text.substr(0, text.find('\n')),
              "n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms");
    EXPECT_NE(text.find("\n3,1,1,\"Bw\","), std::string::npos);
    EXPECT_NE(text.find("\n4,1,1,\"C~\","), std::string::npos);

    VerifyOptions options;
    const auto r = verify_graph(complete(4), options, 7);
    const std::string line = to_json_line(r);
    EXPECT_NE(line.find(R"("graph6":"C~")"), std::string::npos);
    EXPECT_NE(line.find(R"("claim1_ok":true)"), std::string::npos);
    EXPECT_NE(line.find(R"("extremal_class":"Complete")"), std::string::npos);
    EXPECT_NE(line.find(R"("line":7)"), std::string::npos);
}

TEST(Claim1, CompleteGraphAndBipartite)
{
    const auto k4 = check_claim1(complete(4));
    EXPECT_TRUE(k4.ok());
    EXPECT_EQ(k4.s.size(), 3);
    EXPECT_EQ(k4.s.complement().size(), 1);
    EXPECT_EQ(k4.boundary, 3);

    const auto k33 = check_claim1(complete_bipartite(3, 3));
    EXPECT_TRUE(k33.ok());
    EXPECT_EQ(k33.s.size(), 4);
    const VertexSet rest = k33.s.complement();
    EXPECT_EQ(rest.size(), 2);
    EXPECT_EQ(induced_edge_count(complete_bipartite(3, 3), rest), 1);
}

TEST(Claim1, OutOfScopeInputs)
{
    const auto c5 = check_claim1(cycle(5));
    EXPECT_FALSE(c5.applicable);
    const auto pet = check_claim1(petersen());
    EXPECT_FALSE(pet.applicable); // 5 * 2 != 12
}

TEST(DominatingComplement, SmallExamples)
{
    const auto c5 = check_dominating_complement(cycle(5), 2);
    EXPECT_EQ(c5.outcome, ComplementOutcome::Pass);
    EXPECT_EQ(check_dominating_complement(path(4), 2).outcome, ComplementOutcome::NotApplicable);
    EXPECT_EQ(check_dominating_complement(complete(4), 1).outcome, ComplementOutcome::Pass);
    EXPECT_TRUE(is_k_dominating(complete(4), VertexSet(4, {3}), 1));
    EXPECT_FALSE(is_k_dominating(complete(4), VertexSet(4, {3}), 2));
}

TEST(TreeLemma, Examples)
{
    TreeLemmaSummary s;
    check_tree_lemma(path(5), s);
    EXPECT_EQ(s.subsets, 2U);
    check_tree_lemma(star(3), s);
    EXPECT_EQ(s.subsets, 5U);
    // spider: centre 0 with legs 0-1-2, 0-3-4, 0-5, 0-6
    check_tree_lemma(Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {0, 6}}), s);
    EXPECT_EQ(s.subsets, 9U);
    EXPECT_EQ(s.trees, 3U);
    EXPECT_EQ(s.failures, 0U);

    check_tree_lemma(cycle(4), s);
    EXPECT_EQ(s.rejected, 1U);
}

TEST(TreeLemma, ExhaustiveSmallSuite)
{
    const auto s = run_tree_suite(6, 50, 7, 10, 42);
    EXPECT_EQ(s.failures, 0U);
    EXPECT_EQ(s.trees, 1U + 3U + 16U + 125U + 1296U + 50U);
}

TEST(KnownValues, ClosedForms)
{
    const auto values = run_known_values(4);
    EXPECT_EQ(values.size(), 10U + 3U * 2U);
    for (const auto& v : values)
        EXPECT_TRUE(v.ok()) << v.family << ": expected " << v.expected << " got " << v.computed;
    EXPECT_THROW(run_known_values(1), std::invalid_argument);
}

} // namespace
} // namespace forcing
