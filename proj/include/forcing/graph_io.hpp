#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "forcing/graph.hpp"

namespace forcing {

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// line terminator are accepted. Throws ParseError naming the offending offset.
Graph parse_graph6(std::string_view text);

/// Encodes g as graph6 (no header, no newline). Orders above 62 use the
/// four-byte "~" size form.
std::string encode_graph6(const Graph& g);

/// Plain edge list: a line "n m" followed by m lines "u v".
/// ParseError offsets are 1-based line numbers here.
Graph parse_edge_list(std::istream& in);
std::string encode_edge_list(const Graph& g);

} // namespace forcing
