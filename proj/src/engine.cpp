#include "forcing/engine.hpp"

#include <bit>
#include <stdexcept>

#include <json.hpp>

namespace forcing {

namespace {

void check_args(const Graph& g, int k, const VertexSet& s)
{
    if (k < 1)
        throw std::invalid_argument("forcing parameter k must be >= 1");
    if (s.capacity() != g.order())
        throw std::invalid_argument("vertex set capacity " + std::to_string(s.capacity()) +
                                    " does not match graph order " + std::to_string(g.order()));
}

} // namespace

std::uint64_t closure_mask(const Graph& g, int k, std::uint64_t colored)
{
    std::uint64_t pending = colored;
    while (pending != 0) {
        const Vertex v = std::countr_zero(pending);
        pending &= pending - 1;
        const std::uint64_t uncolored = g.neighbor_bits(v) & ~colored;
        const int count = std::popcount(uncolored);
        if (count == 0 || count > k)
            continue;
        colored |= uncolored;
        // newly colored vertices may act, and their colored neighbours lost
        // a non-colored neighbour each
        pending |= uncolored;
        for (std::uint64_t b = uncolored; b != 0; b &= b - 1)
            pending |= g.neighbor_bits(std::countr_zero(b)) & colored;
    }
    return colored;
}

ColorState closure(const Graph& g, int k, const VertexSet& s)
{
    check_args(g, k, s);
    return ColorState{VertexSet::from_bits(g.order(), closure_mask(g, k, s.bits()))};
}

bool is_forcing_set(const Graph& g, int k, const VertexSet& s)
{
    return closure(g, k, s).colored.is_full();
}

ForcingTrace trace(const Graph& g, int k, const VertexSet& s)
{
    check_args(g, k, s);
    ForcingTrace t{k, s, {}};
    std::uint64_t colored = s.bits();
    bool fired = true;
    while (fired) {
        fired = false;
        for (std::uint64_t b = colored; b != 0; b &= b - 1) {
            const Vertex u = std::countr_zero(b);
            const std::uint64_t uncolored = g.neighbor_bits(u) & ~colored;
            const int count = std::popcount(uncolored);
            if (count == 0 || count > k)
                continue;
            const Vertex v = std::countr_zero(uncolored);
            t.events.push_back({u, v});
            colored |= std::uint64_t{1} << v;
            fired = true;
            break;
        }
    }
    return t;
}

VertexSet replay(const Graph& g, const ForcingTrace& t)
{
    check_args(g, t.k, t.initial);
    VertexSet colored = t.initial;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        const auto [u, v] = t.events[i];
        const std::string where = "event " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
            throw std::logic_error(where + ": vertex out of range");
        if (!colored.contains(u))
            throw std::logic_error(where + ": forcer is not colored");
        if (colored.contains(v))
            throw std::logic_error(where + ": forced vertex already colored");
        if (!g.adjacent(u, v))
            throw std::logic_error(where + ": forced vertex is not a neighbour");
        const int uncolored = std::popcount(g.neighbor_bits(u) & ~colored.bits());
        if (uncolored > t.k)
            throw std::logic_error(where + ": forcer has " + std::to_string(uncolored) + " non-colored neighbours");
        colored.insert(v);
    }
    return colored;
}

std::vector<FrontierEntry> stalled_frontier(const Graph& g, int k, const ColorState& state)
{
    check_args(g, k, state.colored);
    std::vector<FrontierEntry> out;
    const std::uint64_t colored = state.colored.bits();
    for (Vertex v : state.colored.members()) {
        const int count = std::popcount(g.neighbor_bits(v) & ~colored);
        if (count > 0)
            out.push_back({v, count});
    }
    return out;
}

std::string to_json_line(const ForcingTrace& t)
{
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : t.events)
        events.push_back({e.forcer, e.forced});
    nlohmann::json j;
    j["k"] = t.k;
    j["initial"] = t.initial.members();
    j["events"] = std::move(events);
    return j.dump();
}

ForcingTrace trace_from_json_line(const std::string& line, int order)
{
    const auto j = nlohmann::json::parse(line);
    ForcingTrace t;
    t.k = j.at("k").get<int>();
    t.initial = VertexSet(order);
    for (int v : j.at("initial").get<std::vector<int>>())
        t.initial.insert(v);
    for (const auto& e : j.at("events"))
        t.events.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    return t;
}

} // namespace forcing
