#pragma once

#include <iosfwd>
#include <string>

#include "dpforge/graph.hpp"

namespace dpforge {

/// graph6 short format, n <= 62: size byte n+63, then the upper-triangle
/// adjacency bits in column-major order (columns 1..n-1, rows top-down),
/// packed big-endian 6 bits per byte, each byte offset by 63, zero-padded.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& bytes);

/// Edge-list text: an "n m" header line, then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

/// DOT output for visualization (write-only).
std::string to_dot(const Graph& g);

enum class GraphFormat { graph6, edges, dot };

/// Reads a graph from a file. Format is detected from the extension
/// (.g6 -> graph6, .edges -> edge list) unless given explicitly.
/// "-" reads standard input, in which case a format is required.
Graph read_graph_file(const std::string& path);
Graph read_graph_file(const std::string& path, GraphFormat format);

std::string format_graph(const Graph& g, GraphFormat format);

}  // namespace dpforge
