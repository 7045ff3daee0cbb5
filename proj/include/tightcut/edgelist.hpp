#pragma once

#include <iosfwd>
#include <string>

#include "tightcut/graph.hpp"

namespace tightcut {

// Edge-list text format:
//   # optional comment lines
//   p <n> <m>
//   e <u> <v>        (m lines, 0-based, u != v; repeats are parallel edges)
// Edge ids follow line order. Throws ParseError carrying the line number.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the same format with edges sorted by endpoint pair. Vertex ids are
// mapped to 0..n-1 by rank, so contracted graphs also serialise.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace tightcut
