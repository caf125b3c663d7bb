// forcing_lab: command-line driver for k-forcing computations.
//
//   forcing_lab solve    --family cycle:5 --k 1
//   forcing_lab closure  --family cycle:5 --set 0,1
//   forcing_lab bounds   --graph6 Bw
//   forcing_lab verify   --enumerate 6 --out records.jsonl --csv summary.csv
//   forcing_lab lemmas   trees --max-n 8 | known --delta-max 4
//   forcing_lab enumerate --n 5
//
// Exit codes: 0 success, 1 counterexample or property failure, 2 input error,
// 3 resource abort.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcing/bounds.hpp"
#include "forcing/engine.hpp"
#include "forcing/enumerate.hpp"
#include "forcing/families.hpp"
#include "forcing/graph_io.hpp"
#include "forcing/solver.hpp"
#include "forcing/verifier.hpp"

namespace {

using nlohmann::json;
using namespace forcing;

constexpr const char* kVersion = "0.1.0";

enum ExitCode { kOk = 0, kFailure = 1, kInputError = 2, kResourceAbort = 3 };

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    int k = 1;
    std::string input;
    std::string graph6;
    std::string family;
    std::string set;
    int enumerate = 0;
    int workers = 1;
    std::uint64_t node_budget = SolveLimits{}.node_budget;
    std::string out;
    std::string csv;
    std::uint64_t seed = 1;
    // lemmas
    int max_n = 8;
    std::size_t random_trees = 500;
    int random_min_n = 9;
    int random_max_n = 16;
    int delta_max = 4;
    std::string method = "bnb";
};

json config_echo(const RunConfig& c)
{
    json j;
    j["command"] = c.command;
    j["version"] = kVersion;
    j["k"] = c.k;
    j["seed"] = c.seed;
    j["node_budget"] = c.node_budget;
    j["workers"] = c.workers;
    if (!c.input.empty())
        j["input"] = c.input;
    if (!c.graph6.empty())
        j["graph6"] = c.graph6;
    if (!c.family.empty())
        j["family"] = c.family;
    if (!c.set.empty())
        j["set"] = c.set;
    if (c.enumerate > 0)
        j["enumerate"] = c.enumerate;
    return j;
}

int default_workers()
{
    if (const char* env = std::getenv("FORCING_LAB_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0)
                return w;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

bool looks_like_edge_list(const std::string& first_line)
{
    std::istringstream in(first_line);
    long a = 0;
    long b = 0;
    std::string rest;
    return static_cast<bool>(in >> a >> b) && !(in >> rest);
}

Graph load_graph(const RunConfig& c)
{
    const int sources = !c.family.empty() + !c.graph6.empty() + !c.input.empty();
    if (sources != 1)
        throw InputError("give exactly one of --family, --graph6, --input");
    try {
        if (!c.family.empty())
            return generate(c.family);
        if (!c.graph6.empty())
            return parse_graph6(c.graph6);
        std::ifstream in(c.input);
        if (!in)
            throw InputError("cannot open " + c.input);
        std::string first;
        std::getline(in, first);
        if (looks_like_edge_list(first)) {
            in.clear();
            in.seekg(0);
            return parse_edge_list(in);
        }
        return parse_graph6(first);
    } catch (const ParseError& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

SolveLimits limits_of(const RunConfig& c)
{
    SolveLimits l;
    l.node_budget = c.node_budget;
    return l;
}

json solve_json(const SolveResult& r)
{
    json j;
    j["value"] = r.value;
    j["witness"] = r.witness.members();
    j["method"] = to_string(r.method);
    j["status"] = to_string(r.status);
    j["nodes"] = r.nodes_explored;
    j["constrained"] = r.constrained;
    if (r.constrained)
        j["complement"] = to_string(r.complement);
    return j;
}

int cmd_solve(const RunConfig& c)
{
    const Graph g = load_graph(c);
    SolveResult r;
    if (c.method == "bnb")
        r = solve(g, c.k, limits_of(c));
    else if (c.method == "oracle")
        r = brute_force_oracle(g, c.k, limits_of(c));
    else if (c.method == "greedy")
        r = greedy_upper_bound(g, c.k);
    else if (c.method == "connected")
        r = solve_connected_complement(g, c.k, limits_of(c));
    else
        throw InputError("unknown --method " + c.method);
    json j = solve_json(r);
    j["config"] = config_echo(c);
    j["graph6"] = encode_graph6(g);
    std::cout << j.dump() << '\n';
    return r.status == SolveStatus::Aborted ? kResourceAbort : kOk;
}

VertexSet parse_set(const std::string& csv, int n)
{
    VertexSet s(n);
    if (csv.empty())
        return s;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw InputError("bad vertex id '" + item + "'");
        }
        if (used != item.size() || v < 0 || v >= n)
            throw InputError("vertex id '" + item + "' outside [0, " + std::to_string(n) + ")");
        s.insert(v);
    }
    return s;
}

int cmd_closure(const RunConfig& c)
{
    const Graph g = load_graph(c);
    const VertexSet s = parse_set(c.set, g.order());
    const ForcingTrace t = trace(g, c.k, s);
    const ColorState final_state = closure(g, c.k, s);
    json j;
    j["config"] = config_echo(c);
    j["forces"] = final_state.colored.is_full();
    j["closure"] = final_state.colored.members();
    j["trace"] = json::parse(to_json_line(t));
    json frontier = json::array();
    for (const auto& f : stalled_frontier(g, c.k, final_state))
        frontier.push_back({f.vertex, f.uncolored_neighbors});
    j["stalled_frontier"] = std::move(frontier);
    std::cout << j.dump() << '\n';
    return kOk;
}

int cmd_bounds(const RunConfig& c)
{
    const Graph g = load_graph(c);
    if (!is_connected(g))
        throw InputError("bounds needs a connected graph");
    const auto stats = degree_stats(g);
    if (stats.max_degree < 2)
        throw InputError("bounds needs maximum degree >= 2");
    const SolveResult r = solve(g, c.k, limits_of(c));
    const BoundReport b = bound_report(g, c.k, r.value);
    json j;
    j["config"] = config_echo(c);
    j["n"] = b.n;
    j["max_degree"] = b.max_degree;
    j["min_degree"] = b.min_degree;
    j["k"] = b.k;
    j["amos_num"] = b.amos.num;
    j["amos_den"] = b.amos.den;
    j["caro_num"] = b.caro_pepper.num;
    j["caro_den"] = b.caro_pepper.den;
    j["f_k"] = r.value;
    j["f_k_status"] = to_string(r.status);
    j["k_connected"] = is_k_connected(g, c.k);
    j["within_amos"] = b.amos.bounds_from_above(r.value);
    j["meets_amos_equality"] = b.meets_amos_equality;
    j["extremal_class"] = to_string(classify_extremal(g));
    std::cout << j.dump() << '\n';
    return r.status == SolveStatus::Aborted ? kResourceAbort : kOk;
}

int cmd_verify(const RunConfig& c)
{
    VerifyOptions options;
    options.k = c.k;
    options.workers = c.workers;
    options.limits = limits_of(c);

    std::ofstream records;
    if (!c.out.empty()) {
        records.open(c.out);
        if (!records)
            throw InputError("cannot write " + c.out);
    }
    auto sink = [&](const VerificationRecord& r) {
        if (records.is_open())
            records << to_json_line(r) << '\n';
    };

    VerifySummary summary;
    if (c.enumerate > 0) {
        if (!c.input.empty())
            throw InputError("give either --enumerate or --input, not both");
        std::vector<Graph> graphs;
        try {
            graphs = enumerate_connected(c.enumerate);
        } catch (const std::out_of_range& e) {
            throw InputError(e.what());
        }
        std::stringstream lines;
        for (const auto& g : graphs)
            lines << encode_graph6(g) << '\n';
        summary = verify_stream(lines, options, sink);
    } else if (!c.input.empty()) {
        std::ifstream in(c.input);
        if (!in)
            throw InputError("cannot open " + c.input);
        summary = verify_stream(in, options, sink);
    } else {
        summary = verify_stream(std::cin, options, sink);
    }

    if (!c.csv.empty()) {
        std::ofstream csv(c.csv);
        if (!csv)
            throw InputError("cannot write " + c.csv);
        write_summary_csv(csv, summary);
    }

    std::size_t extremal = 0;
    json census = json::object();
    for (const auto& [n, oc] : summary.census) {
        extremal += oc.extremal_count;
        census[std::to_string(n)] = {{"graphs", oc.graph_count},
                                     {"extremal", oc.extremal_count},
                                     {"extremal_graph6", oc.extremal_graph6},
                                     {"max_solver_nodes", oc.max_solver_nodes}};
    }
    json counterexamples = json::array();
    for (const auto& r : summary.counterexamples)
        counterexamples.push_back(json::parse(to_json_line(r)));
    json j;
    j["config"] = config_echo(c);
    j["lines"] = summary.lines;
    j["processed"] = summary.processed;
    j["extremal"] = extremal;
    j["skipped"] = summary.skipped;
    j["parse_errors"] = summary.parse_errors;
    j["unresolved"] = summary.unresolved;
    j["claim1_checked"] = summary.claim1_checked;
    j["claim1_failed"] = summary.claim1_failed;
    j["counterexamples"] = std::move(counterexamples);
    j["census"] = std::move(census);
    j["wall_time_ms"] = static_cast<std::int64_t>(summary.wall_time_ms);
    std::cout << j.dump() << '\n';

    if (!summary.counterexamples.empty() || summary.claim1_failed > 0)
        return kFailure;
    if (summary.unresolved > 0)
        return kResourceAbort;
    return kOk;
}

int cmd_lemmas_trees(const RunConfig& c)
{
    const TreeLemmaSummary s = run_tree_suite(c.max_n, c.random_trees, c.random_min_n, c.random_max_n, c.seed);
    json j;
    j["config"] = config_echo(c);
    j["config"]["max_n"] = c.max_n;
    j["config"]["random_trees"] = c.random_trees;
    j["config"]["random_n"] = {c.random_min_n, c.random_max_n};
    j["trees"] = s.trees;
    j["subsets"] = s.subsets;
    j["failures"] = s.failures;
    j["rejected"] = s.rejected;
    j["failing_graph6"] = s.failing_graph6;
    std::cout << j.dump() << '\n';
    return s.failures == 0 ? kOk : kFailure;
}

int cmd_lemmas_known(const RunConfig& c)
{
    const auto values = run_known_values(c.delta_max, limits_of(c));
    json j;
    j["config"] = config_echo(c);
    j["config"]["delta_max"] = c.delta_max;
    json checks = json::array();
    bool all_ok = true;
    for (const auto& v : values) {
        checks.push_back({{"family", v.family}, {"expected", v.expected}, {"computed", v.computed}, {"ok", v.ok()}});
        all_ok = all_ok && v.ok();
    }
    j["checks"] = std::move(checks);
    j["all_confirmed"] = all_ok;
    std::cout << j.dump() << '\n';
    return all_ok ? kOk : kFailure;
}

int cmd_enumerate(const RunConfig& c)
{
    std::vector<Graph> graphs;
    try {
        graphs = enumerate_connected(c.enumerate);
    } catch (const std::out_of_range& e) {
        throw InputError(e.what());
    }
    std::ofstream file;
    if (!c.out.empty()) {
        file.open(c.out);
        if (!file)
            throw InputError("cannot write " + c.out);
    }
    std::ostream& out = file.is_open() ? file : std::cout;
    for (const auto& g : graphs)
        out << encode_graph6(g) << '\n';
    return kOk;
}

void add_graph_options(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--family", c.family, "inline family spec, e.g. cycle:5, complete_bipartite:3,3");
    sub->add_option("--graph6", c.graph6, "graph6 string");
    sub->add_option("--input", c.input, "file holding a graph6 line or an edge list");
}

void add_common_options(CLI::App* sub, RunConfig& c)
{
    sub->add_option("--k", c.k, "forcing parameter")->check(CLI::PositiveNumber);
    sub->add_option("--node-budget", c.node_budget, "search node budget")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed recorded in outputs and used by randomised suites");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"k-forcing sets, forcing numbers and extremal verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunConfig c;
    c.workers = default_workers();

    auto* solve_cmd = app.add_subcommand("solve", "exact minimum k-forcing set");
    add_graph_options(solve_cmd, c);
    add_common_options(solve_cmd, c);
    solve_cmd->add_option("--method", c.method, "bnb | oracle | greedy | connected");

    auto* closure_cmd = app.add_subcommand("closure", "run the color change rule from a set");
    add_graph_options(closure_cmd, c);
    add_common_options(closure_cmd, c);
    closure_cmd->add_option("--set", c.set, "initially colored vertex ids, comma separated");

    auto* bounds_cmd = app.add_subcommand("bounds", "upper bounds and equality check");
    add_graph_options(bounds_cmd, c);
    add_common_options(bounds_cmd, c);

    auto* verify_cmd = app.add_subcommand("verify", "exhaustive equality verification over a graph6 stream");
    add_common_options(verify_cmd, c);
    verify_cmd->add_option("--input", c.input, "graph6 file (standard input when absent)");
    verify_cmd->add_option("--enumerate", c.enumerate, "use the built-in enumerator for this order (<= 7)");
    verify_cmd->add_option("--workers", c.workers, "worker threads (default $FORCING_LAB_WORKERS or all cores)")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", c.out, "JSONL record output");
    verify_cmd->add_option("--csv", c.csv, "CSV summary output");

    auto* lemmas_cmd = app.add_subcommand("lemmas", "property suites");
    lemmas_cmd->require_subcommand(1);
    auto* trees_cmd = lemmas_cmd->add_subcommand("trees", "leaf subsets of trees force");
    add_common_options(trees_cmd, c);
    trees_cmd->add_option("--max-n", c.max_n, "exhaustive Pruefer enumeration up to this order");
    trees_cmd->add_option("--random", c.random_trees, "number of seeded random trees");
    trees_cmd->add_option("--random-min-n", c.random_min_n, "smallest random tree order");
    trees_cmd->add_option("--random-max-n", c.random_max_n, "largest random tree order");
    auto* known_cmd = lemmas_cmd->add_subcommand("known", "closed-form forcing numbers");
    add_common_options(known_cmd, c);
    known_cmd->add_option("--delta-max", c.delta_max, "largest degree checked");

    auto* enumerate_cmd = app.add_subcommand("enumerate", "print connected graphs of one order as graph6");
    enumerate_cmd->add_option("--n", c.enumerate, "order (<= 7)")->required();
    enumerate_cmd->add_option("--out", c.out, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (solve_cmd->parsed()) {
            c.command = "solve";
            return cmd_solve(c);
        }
        if (closure_cmd->parsed()) {
            c.command = "closure";
            return cmd_closure(c);
        }
        if (bounds_cmd->parsed()) {
            c.command = "bounds";
            return cmd_bounds(c);
        }
        if (verify_cmd->parsed()) {
            c.command = "verify";
            return cmd_verify(c);
        }
        if (trees_cmd->parsed()) {
            c.command = "lemmas trees";
            return cmd_lemmas_trees(c);
        }
        if (known_cmd->parsed()) {
            c.command = "lemmas known";
            return cmd_lemmas_known(c);
        }
        if (enumerate_cmd->parsed()) {
            c.command = "enumerate";
            return cmd_enumerate(c);
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
