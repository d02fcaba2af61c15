#pragma once

#include "ureq/graph.hpp"

#include <string>
#include <string_view>

namespace ureq {

/// Reads the edge-list text format:
///
///     # optional comments, anywhere after '#'
///     <n>
///     <u> <v>
///     ...
///
/// Duplicate edges collapse. Throws ParseError naming the offending line.
Graph parse_edge_list(std::string_view text);

/// Writes the edge-list format (no comments, one edge per line, sorted).
std::string to_edge_list(const Graph& g);

/// graph6 body (no trailing newline). An optional ">>graph6<<" header and
/// surrounding whitespace are accepted. Throws FormatError.
Graph parse_graph6(std::string_view bytes);
std::string to_graph6(const Graph& g);

/// Largest order representable with the one- and four-byte size headers.
inline constexpr int kGraph6MaxOrder = 258047;

enum class GraphFormat { Graph6, EdgeList };

/// Edge lists start with a digit or a comment; graph6 bodies never do.
GraphFormat detect_format(std::string_view text);

/// Parses a single graph in the given (or detected) format.
Graph parse_graph(std::string_view text, GraphFormat format);
Graph parse_graph(std::string_view text);

} // namespace ureq
