#include "coxeter/textio.hpp"

#include <cctype>
#include <sstream>

#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

bool identifier_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize_line(const std::string& line, int line_no) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#') {
      ++i;
    }
    out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    (void)line_no;
  }
  return out;
}

void check_identifier(const Token& t, int line_no) {
  for (char c : t.text) {
    if (!identifier_char(c)) {
      throw ParseError(line_no, t.column,
                       "identifier '" + t.text + "' contains invalid character '" +
                           std::string(1, c) + "'");
    }
  }
}

}  // namespace

GraphDocument parse_graph_text(const std::string& text, const std::string& source_name) {
  GraphDocument doc;
  doc.source_name = source_name;

  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool saw_vertices = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> tokens = tokenize_line(line, line_no);
    if (tokens.empty()) continue;

    if (tokens[0].text == "vertices:") {
      if (saw_vertices) {
        throw ParseError(line_no, tokens[0].column, "duplicate vertices: line");
      }
      saw_vertices = true;
      doc.vertices_line = line_no;
      for (size_t i = 1; i < tokens.size(); ++i) {
        check_identifier(tokens[i], line_no);
        vertices.push_back(tokens[i].text);
      }
      continue;
    }
    if (tokens[0].text == "edge") {
      if (!saw_vertices) {
        throw ParseError(line_no, tokens[0].column, "edge before the vertices: line");
      }
      if (tokens.size() < 3 || tokens.size() > 4) {
        throw ParseError(line_no, tokens[0].column,
                         "expected: edge <u> <v> [m] with m an integer >= 3 or inf");
      }
      check_identifier(tokens[1], line_no);
      check_identifier(tokens[2], line_no);
      Bond label = Bond::finite(3);
      if (tokens.size() == 4) {
        const Token& lt = tokens[3];
        if (lt.text == "inf") {
          label = Bond::infinity();
        } else {
          int m = 0;
          try {
            size_t used = 0;
            m = std::stoi(lt.text, &used);
            if (used != lt.text.size()) throw std::invalid_argument("");
          } catch (const std::exception&) {
            throw ParseError(line_no, lt.column, "bad label '" + lt.text + "' (integer or inf)");
          }
          if (m == 2) {
            throw ParseError(line_no, lt.column, "label 2 is not written; omit the edge instead");
          }
          if (m < 3) {
            throw ParseError(line_no, lt.column,
                             "label " + std::to_string(m) + " out of range (>= 3 or inf)");
          }
          label = Bond::finite(m);
        }
      }
      edges.push_back(Edge{tokens[1].text, tokens[2].text, label});
      edge_lines.push_back(line_no);
      continue;
    }
    throw ParseError(line_no, tokens[0].column,
                     "unknown directive '" + tokens[0].text + "' (expected vertices: or edge)");
  }
  if (!saw_vertices) {
    throw ParseError(std::max(line_no, 1), 1, "missing vertices: line");
  }

  // Build one edge at a time so semantic errors can cite their line.
  try {
    Graph::build(vertices, {});
  } catch (const DomainError& e) {
    throw ParseError(doc.vertices_line, 1, e.what());
  }
  std::vector<Edge> accepted;
  for (size_t i = 0; i < edges.size(); ++i) {
    accepted.push_back(edges[i]);
    try {
      doc.graph = Graph::build(vertices, accepted);
    } catch (const DomainError& e) {
      throw ParseError(edge_lines[i], 1, e.what());
    }
  }
  if (edges.empty()) doc.graph = Graph::build(vertices, {});
  doc.edge_lines = std::move(edge_lines);
  return doc;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const std::string& v : g.vertices()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edge_list()) {
    out << "edge " << e.u << ' ' << e.v << ' ' << bond_to_string(e.label) << '\n';
  }
  return out.str();
}

}  // namespace coxeter
