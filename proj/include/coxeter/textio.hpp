#ifndef COXETER_TEXTIO_HPP
#define COXETER_TEXTIO_HPP

#include <string>

#include "coxeter/graph.hpp"

namespace coxeter {

/// Parsed graph plus source positions for diagnostics.
///
/// Text format, one directive per line, `#` starts a comment:
///   vertices: a b c
///   edge a b 3
///   edge a c inf
/// Labels are integers >= 3 or `inf`; an omitted label means 3; m = 2 is
/// expressed by omitting the edge.  Identifiers match [A-Za-z0-9_]+.
struct GraphDocument {
  Graph graph;
  std::string source_name;
  int vertices_line = 0;           // line of the vertices: directive
  std::vector<int> edge_lines;     // line of each edge directive, in order
};

/// Parses the text format; throws ParseError with 1-based line/column on
/// syntax errors and semantic errors (unknown vertex, duplicate edge,
/// self-loop, label < 3).
GraphDocument parse_graph_text(const std::string& text, const std::string& source_name = "<input>");

/// Canonical serialization: one vertices: line in graph order, one edge
/// line per bond in index order, labels always explicit.  Parsing the
/// result reproduces the graph exactly.
std::string serialize_graph(const Graph& g);

}  // namespace coxeter

#endif
