#include "coxeter/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_map>
#include <unordered_set>

#include "coxeter/errors.hpp"

namespace coxeter {

double Bond::adjacency_entry() const {
  if (infinite()) return 2.0;      // cos(pi/inf) = 1, exactly
  if (m == 3) return 1.0;          // keep simply laced matrices exactly integral
  return 2.0 * std::cos(std::numbers::pi / static_cast<double>(m));
}

std::string bond_to_string(const Bond& b) {
  return b.infinite() ? "inf" : std::to_string(b.m);
}

Graph Graph::build(std::vector<std::string> vertices, const std::vector<Edge>& edges) {
  if (vertices.size() > kMaxVertices) {
    throw DomainError("graph has " + std::to_string(vertices.size()) +
                      " vertices; at most " + std::to_string(kMaxVertices) + " supported");
  }
  Graph g;
  g.vertices_ = std::move(vertices);
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < g.size(); ++i) {
    if (!index.emplace(g.vertices_[static_cast<size_t>(i)], i).second) {
      throw DomainError("duplicate vertex '" + g.vertices_[static_cast<size_t>(i)] + "'");
    }
  }
  g.adjacency_.assign(g.vertices_.size(), 0);
  for (const Edge& e : edges) {
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end()) throw DomainError("unknown edge endpoint '" + e.u + "'");
    if (iv == index.end()) throw DomainError("unknown edge endpoint '" + e.v + "'");
    if (iu->second == iv->second) {
      throw DomainError("self-loop at vertex '" + e.u + "'");
    }
    if (!e.label.infinite() && e.label.m < 3) {
      throw DomainError("edge (" + e.u + ", " + e.v + ") has label " +
                        std::to_string(e.label.m) +
                        "; labels must be >= 3 or inf (m = 2 means no edge)");
    }
    auto key = std::minmax(iu->second, iv->second);
    if (!g.edges_.emplace(key, e.label).second) {
      throw DomainError("duplicate edge (" + e.u + ", " + e.v + ")");
    }
    g.adjacency_[static_cast<size_t>(key.first)] |= (std::uint64_t{1} << key.second);
    g.adjacency_[static_cast<size_t>(key.second)] |= (std::uint64_t{1} << key.first);
  }
  return g;
}

int Graph::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i) {
    if (vertices_[static_cast<size_t>(i)] == name) return i;
  }
  return -1;
}

std::optional<Bond> Graph::bond(int i, int j) const {
  auto it = edges_.find(std::minmax(i, j));
  if (it == edges_.end()) return std::nullopt;
  return it->second;
}

std::optional<Bond> Graph::bond(const std::string& u, const std::string& v) const {
  int i = index_of(u);
  int j = index_of(v);
  if (i < 0 || j < 0 || i == j) return std::nullopt;
  return bond(i, j);
}

bool Graph::integer_adjacency() const {
  for (const auto& [key, label] : edges_) {
    if (!label.infinite() && label.m != 3) return false;
  }
  return true;
}

bool Graph::simply_laced() const {
  for (const auto& [key, label] : edges_) {
    if (label.infinite() || label.m != 3) return false;
  }
  return true;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, label] : edges_) {
    out.push_back(Edge{vertices_[static_cast<size_t>(key.first)],
                       vertices_[static_cast<size_t>(key.second)], label});
  }
  return out;
}

std::uint64_t vertex_mask(const Graph& g, const VertexSet& x) {
  std::uint64_t mask = 0;
  for (const std::string& name : x) {
    int i = g.index_of(name);
    if (i < 0) throw DomainError("vertex '" + name + "' is not in the graph");
    mask |= (std::uint64_t{1} << i);
  }
  return mask;
}

VertexSet vertices_from_mask(const Graph& g, std::uint64_t mask) {
  VertexSet out;
  for (int i = 0; i < g.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) out.push_back(g.vertex(i));
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
  std::vector<std::string> verts;
  std::vector<int> old_index;
  for (int i = 0; i < g.size(); ++i) {
    if (mask & (std::uint64_t{1} << i)) {
      verts.push_back(g.vertex(i));
      old_index.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (size_t a = 0; a < old_index.size(); ++a) {
    for (size_t b = a + 1; b < old_index.size(); ++b) {
      if (auto bd = g.bond(old_index[a], old_index[b])) {
        edges.push_back(Edge{verts[a], verts[b], *bd});
      }
    }
  }
  return Graph::build(std::move(verts), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  return induced_subgraph(g, vertex_mask(g, x));
}

bool are_disjoint(const VertexSet& x, const VertexSet& y) {
  std::unordered_set<std::string> seen(x.begin(), x.end());
  for (const std::string& name : y) {
    if (seen.count(name)) return false;
  }
  return true;
}

bool are_separated_masks(const Graph& g, std::uint64_t x, std::uint64_t y) {
  if (x & y) return false;
  for (int i = 0; i < g.size(); ++i) {
    if ((x >> i) & 1) {
      if (g.neighbor_mask(i) & y) return false;
    }
  }
  return true;
}

bool are_separated(const Graph& g, const VertexSet& x, const VertexSet& y) {
  return are_separated_masks(g, vertex_mask(g, x), vertex_mask(g, y));
}

namespace {

std::uint64_t component_mask_from(const Graph& g, int start, std::uint64_t within) {
  std::uint64_t frontier = std::uint64_t{1} << start;
  std::uint64_t comp = 0;
  while (frontier) {
    comp |= frontier;
    std::uint64_t next = 0;
    for (int i = 0; i < g.size(); ++i) {
      if ((frontier >> i) & 1) next |= g.neighbor_mask(i);
    }
    frontier = next & within & ~comp;
  }
  return comp;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t remaining =
      g.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1);
  while (remaining) {
    int start = std::countr_zero(remaining);
    std::uint64_t comp = component_mask_from(g, start, remaining);
    out.push_back(vertices_from_mask(g, comp));
    remaining &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.empty()) return false;
  std::uint64_t all = g.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1);
  return component_mask_from(g, 0, all) == all;
}

bool mask_connected(const Graph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  int start = std::countr_zero(mask);
  return component_mask_from(g, start, mask) == mask;
}

}  // namespace coxeter
