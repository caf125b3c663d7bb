#include "forcing/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <random>
#include <thread>

#include <json.hpp>

#include "forcing/engine.hpp"
#include "forcing/families.hpp"
#include "forcing/graph_io.hpp"

namespace forcing {

std::string to_string(RecordStatus s)
{
    switch (s) {
    case RecordStatus::Ok:
        return "ok";
    case RecordStatus::Counterexample:
        return "counterexample";
    case RecordStatus::Unresolved:
        return "unresolved";
    case RecordStatus::Skipped:
        return "skipped";
    case RecordStatus::ParseError:
        return "parse_error";
    }
    return "unknown";
}

std::string to_json_line(const VerificationRecord& r)
{
    nlohmann::json j;
    j["line"] = r.line;
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["max_degree"] = r.max_degree;
    j["min_degree"] = r.min_degree;
    j["k"] = r.k;
    j["f_k"] = r.f_k;
    j["bound_num"] = r.bound.num;
    j["bound_den"] = r.bound.den;
    j["equality"] = r.equality;
    j["extremal_class"] = to_string(r.extremal_class.tag);
    j["extremal_parameter"] = r.extremal_class.parameter;
    j["claim1_ok"] = r.claim1_ok ? nlohmann::json(*r.claim1_ok) : nlohmann::json(nullptr);
    j["solver_nodes"] = r.solver_nodes;
    j["status"] = to_string(r.status);
    if (!r.note.empty())
        j["note"] = r.note;
    return j.dump();
}

VerificationRecord verify_graph(const Graph& g, const VerifyOptions& options, std::size_t line, std::string graph6)
{
    const auto started = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.line = line;
    r.graph6 = graph6.empty() && g.order() <= 62 ? encode_graph6(g) : std::move(graph6);
    r.n = g.order();
    r.k = options.k;
    auto finish = [&]() -> VerificationRecord {
        r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        return r;
    };
    auto skip = [&](std::string why) {
        r.status = RecordStatus::Skipped;
        r.note = std::move(why);
        return finish();
    };

    if (!is_connected(g))
        return skip("disconnected");
    const auto stats = degree_stats(g);
    r.max_degree = stats.max_degree;
    r.min_degree = stats.min_degree;
    if (r.max_degree < 2)
        return skip("maximum degree below 2");
    if (options.k > 1 && !is_k_connected(g, options.k))
        return skip("not " + std::to_string(options.k) + "-connected");

    const SolveResult solved = solve(g, options.k, options.limits);
    r.solver_nodes = solved.nodes_explored;
    r.f_k = solved.value;
    r.bound = amos_bound(r.n, r.max_degree, options.k);
    r.extremal_class = classify_extremal(g);
    if (!solved.optimal()) {
        r.status = RecordStatus::Unresolved;
        r.note = "solver budget exhausted; f_k is an upper bound";
        return finish();
    }
    r.equality = r.bound.equals(r.f_k);

    if (!r.bound.bounds_from_above(r.f_k)) {
        r.status = RecordStatus::Counterexample;
        r.note = "upper bound violated";
    } else if (options.k == 1 && r.equality != (r.extremal_class.tag != ExtremalTag::None)) {
        r.status = RecordStatus::Counterexample;
        r.note = r.equality ? "equality on a graph outside the extremal families"
                            : "extremal family member below the bound";
    } else if (options.k == 1 && r.equality && r.min_degree != r.max_degree) {
        r.status = RecordStatus::Counterexample;
        r.note = "equality on a non-regular graph";
    }

    if (options.k == 1 && options.claim1 && r.equality && r.max_degree >= 3) {
        const Claim1Result c = check_claim1(g, options.limits);
        r.claim1_ok = c.ok();
        if (!c.ok() && r.note.empty())
            r.note = "claim1: " + c.note;
    }
    return finish();
}

namespace {

struct PendingLine {
    std::size_t line;
    std::string text;
};

VerificationRecord process_line(const PendingLine& item, const VerifyOptions& options)
{
    try {
        const Graph g = parse_graph6(item.text);
        return verify_graph(g, options, item.line, item.text);
    } catch (const ParseError& e) {
        VerificationRecord r;
        r.line = item.line;
        r.graph6 = item.text;
        r.k = options.k;
        r.status = RecordStatus::ParseError;
        r.note = e.what();
        return r;
    } catch (const std::invalid_argument& e) {
        VerificationRecord r;
        r.line = item.line;
        r.graph6 = item.text;
        r.k = options.k;
        r.status = RecordStatus::ParseError;
        r.note = e.what();
        return r;
    }
}

void absorb(VerifySummary& summary, const VerificationRecord& r)
{
    switch (r.status) {
    case RecordStatus::ParseError:
        ++summary.parse_errors;
        summary.error_lines.emplace_back(r.line, r.note);
        return;
    case RecordStatus::Skipped:
        ++summary.skipped;
        summary.skipped_lines.emplace_back(r.line, r.note);
        return;
    case RecordStatus::Unresolved:
        ++summary.unresolved;
        summary.error_lines.emplace_back(r.line, r.note);
        break;
    case RecordStatus::Counterexample:
        summary.counterexamples.push_back(r);
        break;
    case RecordStatus::Ok:
        break;
    }
    ++summary.processed;
    if (r.claim1_ok) {
        ++summary.claim1_checked;
        if (!*r.claim1_ok)
            ++summary.claim1_failed;
    }
    auto& c = summary.census[r.n];
    ++c.graph_count;
    if (r.equality) {
        ++c.extremal_count;
        c.extremal_graph6.push_back(r.graph6);
    }
    c.max_solver_nodes = std::max(c.max_solver_nodes, r.solver_nodes);
    c.wall_time_ms += r.elapsed_ms;
}

} // namespace

VerifySummary verify_stream(std::istream& in, const VerifyOptions& options,
                            const std::function<void(const VerificationRecord&)>& sink)
{
    const auto started = std::chrono::steady_clock::now();
    const int workers = std::max(1, options.workers);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch);
    VerifySummary summary;

    std::vector<PendingLine> batch;
    std::vector<VerificationRecord> results;
    auto flush = [&]() {
        results.assign(batch.size(), {});
        std::atomic<std::size_t> next{0};
        auto work = [&]() {
            for (std::size_t i = next++; i < batch.size(); i = next++)
                results[i] = process_line(batch[i], options);
        };
        if (workers == 1 || batch.size() == 1) {
            work();
        } else {
            std::vector<std::jthread> pool;
            const auto spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), batch.size());
            for (std::size_t w = 0; w < spawn; ++w)
                pool.emplace_back(work);
        }
        // pool joined; emit in input order
        for (const auto& r : results) {
            absorb(summary, r);
            if (sink)
                sink(r);
        }
        batch.clear();
    };

    std::string text;
    std::size_t line_no = 0;
    while (std::getline(in, text)) {
        ++line_no;
        while (!text.empty() && (text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
            text.pop_back();
        if (text.empty() || text == ">>graph6<<")
            continue;
        ++summary.lines;
        batch.push_back({line_no, text});
        if (batch.size() >= batch_size)
            flush();
    }
    if (!batch.empty())
        flush();
    summary.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return summary;
}

void write_summary_csv(std::ostream& out, const VerifySummary& summary)
{
    out << "n,graph_count,extremal_count,extremal_graph6_list,max_solver_nodes,wall_time_ms\n";
    for (const auto& [n, c] : summary.census) {
        std::string list;
        for (const auto& g6 : c.extremal_graph6) {
            if (!list.empty())
                list += ' ';
            list += g6;
        }
        // graph6 may contain commas and quotes
        std::string quoted = "\"";
        for (char ch : list) {
            if (ch == '"')
                quoted += '"';
            quoted += ch;
        }
        quoted += '"';
        out << n << ',' << c.graph_count << ',' << c.extremal_count << ',' << quoted << ',' << c.max_solver_nodes
            << ',' << static_cast<std::int64_t>(c.wall_time_ms + 0.5) << '\n';
    }
}

Claim1Result check_claim1(const Graph& g, const SolveLimits& limits)
{
    Claim1Result c;
    if (!is_connected(g)) {
        c.note = "graph is disconnected";
        return c;
    }
    const auto stats = degree_stats(g);
    if (stats.max_degree < 3) {
        c.note = "maximum degree below 3";
        return c;
    }
    const SolveResult z = solve(g, 1, limits);
    if (!z.optimal()) {
        c.note = "zero forcing number unresolved";
        return c;
    }
    c.zero_forcing_number = z.value;
    if (!check_amos_equality(z.value, g.order(), stats.max_degree)) {
        c.note = "graph does not meet the equality";
        return c;
    }
    c.applicable = true;

    const SolveResult constrained = solve_connected_complement(g, 1, limits);
    if (!constrained.optimal() || constrained.complement != ComplementStatus::Connected) {
        c.note = "no minimum zero forcing set with nonempty connected complement";
        return c;
    }
    c.found_set = true;
    c.s = constrained.witness;
    const VertexSet outside = c.s.complement();
    c.size_is_minimum = c.s.size() == c.zero_forcing_number;
    c.one_outside_neighbor = std::ranges::all_of(c.s.members(), [&](Vertex v) {
        return std::popcount(g.neighbor_bits(v) & outside.bits()) == 1;
    });
    c.complement_is_tree = induces_connected(g, outside) && induced_edge_count(g, outside) == outside.size() - 1;
    c.boundary = edge_boundary(g, c.s);
    c.boundary_at_least_size = c.boundary >= c.s.size();
    if (!c.ok()) {
        c.note = !c.size_is_minimum         ? "constrained set larger than Z(G)"
                 : !c.one_outside_neighbor  ? "a vertex of S has other than one outside neighbour"
                 : !c.complement_is_tree    ? "complement does not induce a tree"
                                            : "edge boundary smaller than |S|";
    }
    return c;
}

bool is_k_dominating(const Graph& g, const VertexSet& d, int k)
{
    return std::ranges::all_of(d.complement().members(), [&](Vertex v) {
        return std::popcount(g.neighbor_bits(v) & d.bits()) >= k;
    });
}

DominatingComplementResult check_dominating_complement(const Graph& g, int k, const SolveLimits& limits)
{
    DominatingComplementResult r;
    if (!is_k_connected(g, k))
        return r;
    const auto minima = connected_complement_minima(g, k, limits);
    r.minima = minima.size();
    if (minima.empty()) {
        r.outcome = ComplementOutcome::Absent;
        return r;
    }
    for (const auto& s : minima) {
        const VertexSet d = s.complement();
        if (!induces_connected(g, d) || !is_k_dominating(g, d, k))
            r.failing.push_back(s);
    }
    r.outcome = r.failing.empty() ? ComplementOutcome::Pass : ComplementOutcome::Fail;
    return r;
}

void check_tree_lemma(const Graph& tree, TreeLemmaSummary& summary)
{
    const int n = tree.order();
    if (n < 2 || tree.size() != n - 1 || !is_connected(tree)) {
        ++summary.rejected;
        return;
    }
    ++summary.trees;
    VertexSet leaves(n);
    for (int v = 0; v < n; ++v)
        if (tree.degree(v) == 1)
            leaves.insert(v);
    bool failed = false;
    for (Vertex dropped : leaves.members()) {
        VertexSet s = leaves;
        s.erase(dropped);
        ++summary.subsets;
        if (!is_forcing_set(tree, 1, s)) {
            ++summary.failures;
            failed = true;
        }
    }
    if (failed && summary.failing_graph6.size() < 32)
        summary.failing_graph6.push_back(encode_graph6(tree));
}

TreeLemmaSummary run_tree_lemma(const std::vector<Graph>& trees)
{
    TreeLemmaSummary summary;
    for (const auto& t : trees)
        check_tree_lemma(t, summary);
    return summary;
}

TreeLemmaSummary run_tree_suite(int max_n, std::size_t random_count, int random_min_n, int random_max_n,
                                std::uint64_t seed)
{
    TreeLemmaSummary summary;
    for (int n = 2; n <= max_n; ++n)
        for_each_pruefer(n, [&](std::span<const int> seq) {
            check_tree_lemma(tree_from_pruefer(seq), summary);
            return true;
        });
    if (random_count > 0) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> order(random_min_n, random_max_n);
        for (std::size_t i = 0; i < random_count; ++i) {
            const auto seq = random_pruefer(order(rng), rng);
            check_tree_lemma(tree_from_pruefer(seq), summary);
        }
    }
    return summary;
}

std::vector<KnownValue> run_known_values(int delta_max, const SolveLimits& limits)
{
    if (delta_max < 2)
        throw std::invalid_argument("run_known_values needs delta_max >= 2");
    std::vector<KnownValue> out;
    auto record = [&](const Graph& g, int expected) {
        const SolveResult r = solve(g, 1, limits);
        out.push_back({g.name(), expected, r.optimal() ? r.value : -1});
    };
    for (int n = 3; n <= 12; ++n)
        record(cycle(n), 2);
    for (int delta = 2; delta <= delta_max; ++delta) {
        record(complete(delta + 1), delta);
        record(complete_bipartite(delta, delta), 2 * delta - 2);
    }
    return out;
}

} // namespace forcing
