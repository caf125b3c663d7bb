#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

/// Colored vertices of a host graph at some point of the forcing process.
struct ColorState {
    VertexSet colored;
};

struct ForceEvent {
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const ForceEvent&, const ForceEvent&) = default;
};

/// Ordered (forcer, forced) record of a k-forcing run from `initial`.
struct ForcingTrace {
    int k = 1;
    VertexSet initial;
    std::vector<ForceEvent> events;
};

/// Applies the color change rule to a fixed point: a colored vertex with at
/// most k non-colored neighbours colors all of them. Requires k >= 1 and
/// s.capacity() == g.order().
ColorState closure(const Graph& g, int k, const VertexSet& s);

/// closure() on raw bit masks without argument checks, for search loops.
std::uint64_t closure_mask(const Graph& g, int k, std::uint64_t colored);

bool is_forcing_set(const Graph& g, int k, const VertexSet& s);

/// Deterministic trace: one event per step, always the eligible
/// (forcer, forced) pair that is lexicographically smallest.
ForcingTrace trace(const Graph& g, int k, const VertexSet& s);

/// Validates `t` against g by replay. Returns the set colored at the end, or
/// throws std::logic_error describing the first illegal event.
VertexSet replay(const Graph& g, const ForcingTrace& t);

struct FrontierEntry {
    Vertex vertex;
    int uncolored_neighbors;
    friend bool operator==(const FrontierEntry&, const FrontierEntry&) = default;
};

/// Every colored vertex with at least one non-colored neighbour, with the
/// count of those neighbours, in increasing vertex order. `k` is accepted for
/// symmetry with the other calls; entries with count <= k are the ones that
/// can still act.
std::vector<FrontierEntry> stalled_frontier(const Graph& g, int k, const ColorState& state);

/// One JSON line: {"k":..,"initial":[..],"events":[[u,v],..]}.
std::string to_json_line(const ForcingTrace& t);
ForcingTrace trace_from_json_line(const std::string& line, int order);

} // namespace forcing
