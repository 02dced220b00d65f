#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "eigenframe/graphcore/graph.hpp"

namespace eigenframe {

/// Decodes one graph6 string (an optional ">>graph6<<" header and a trailing
/// newline are accepted). Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encodes a graph in graph6 (no header, no newline). Labels are dropped.
std::string emit_graph6(const Graph& g);

/// Reads one graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace eigenframe
