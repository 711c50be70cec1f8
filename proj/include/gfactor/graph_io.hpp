#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gfactor/graph.hpp"

namespace gfactor {

// Line-oriented text format:
//
//   # comment
//   p multigraph <n> <m>
//   e <u> <v>            (one per edge, u == v is a loop)
//   f <v> <g(v)> <f(v)>  (optional, all vertices or none)
//
// Vertices are 1..n and edge ids follow the order of the e lines.
struct GraphFile {
  MultiGraph graph;
  std::optional<VertexIntMap> lower;  // g
  std::optional<VertexIntMap> upper;  // f
};

// Throws InputError carrying the offending line number.
GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);

// Canonical form: header, edges in id order, functions in vertex order, LF
// line endings. Requires vertex ids 1..n in order and edge ids 0..m-1.
std::string serialize_graph(const MultiGraph& g,
                            const VertexIntMap* lower = nullptr,
                            const VertexIntMap* upper = nullptr);
std::string serialize_graph(const GraphFile& file);

}  // namespace gfactor
