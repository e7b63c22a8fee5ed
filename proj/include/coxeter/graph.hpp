#ifndef COXETER_GRAPH_HPP
#define COXETER_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coxeter {

/// Bond label m of an edge.  Stored labels are finite m >= 3 or infinity;
/// m = 2 (commuting generators) is represented by the absence of an edge and
/// m = 1 only ever occurs on the diagonal, so neither is storable.
struct Bond {
  static constexpr int kInfinity = std::numeric_limits<int>::max();

  int m = 3;

  static Bond finite(int m) { return Bond{m}; }
  static Bond infinity() { return Bond{kInfinity}; }

  bool infinite() const { return m == kInfinity; }

  /// Entry of the generalized adjacency matrix: 2*cos(pi/m), with the
  /// infinite bond mapped to the exact real 2.
  double adjacency_entry() const;

  friend bool operator==(const Bond&, const Bond&) = default;
  friend auto operator<=>(const Bond&, const Bond&) = default;
};

/// Formats a bond as its integer value or "inf".
std::string bond_to_string(const Bond& b);

struct Edge {
  std::string u;
  std::string v;
  Bond label = Bond::finite(3);
};

/// A subset of some graph's vertices.  Order and duplicates are irrelevant;
/// operations validate membership against the graph they are applied to.
using VertexSet = std::vector<std::string>;

/// A finite labeled Coxeter graph.  Vertices are named, and vertex order is
/// part of the value: it fixes the row order of every matrix derived from
/// the graph, so certificates can reference coordinates.  All classification
/// outputs are invariant under reordering.
class Graph {
 public:
  /// Bitmask vertex sets cap the size.
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  /// Validating constructor.  Throws DomainError naming the offending item:
  /// duplicate vertex, self-loop, unknown endpoint, duplicate edge, or a
  /// label < 3 (m = 2 must be encoded as edge absence).
  static Graph build(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::string& vertex(int i) const { return vertices_[i]; }

  /// Index of a named vertex, or -1.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  /// Edges keyed by index pair (i < j).
  const std::map<std::pair<int, int>, Bond>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::optional<Bond> bond(int i, int j) const;
  std::optional<Bond> bond(const std::string& u, const std::string& v) const;

  /// Bitmask of neighbors of vertex i.
  std::uint64_t neighbor_mask(int i) const { return adjacency_[static_cast<size_t>(i)]; }

  /// True when every bond label is 3 or infinity, i.e. the generalized
  /// adjacency matrix is integer valued and the exact signature path applies.
  bool integer_adjacency() const;

  /// True when every bond label is exactly 3.
  bool simply_laced() const;

  /// Edge list in (i, j) order with vertex names.
  std::vector<Edge> edge_list() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::map<std::pair<int, int>, Bond> edges_;
  std::vector<std::uint64_t> adjacency_;
};

/// Validates that every name in X is a vertex of g and returns the bitmask.
std::uint64_t vertex_mask(const Graph& g, const VertexSet& x);

/// Vertices of g selected by mask, in g's vertex order.
VertexSet vertices_from_mask(const Graph& g, std::uint64_t mask);

/// Subgraph on X in g's vertex order, keeping every bond whose endpoints are
/// both in X.  Throws DomainError when X is not a subset of g's vertices.
Graph induced_subgraph(const Graph& g, const VertexSet& x);
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

/// True iff the two sets have empty intersection.
bool are_disjoint(const VertexSet& x, const VertexSet& y);

/// True iff X and Y are disjoint and no edge of g joins them, i.e. the
/// induced subgraph on their union is the disjoint union of the two parts.
bool are_separated(const Graph& g, const VertexSet& x, const VertexSet& y);
bool are_separated_masks(const Graph& g, std::uint64_t x, std::uint64_t y);

/// Maximal connected vertex sets, ordered by least vertex index.  Each set
/// is in the graph's vertex order.  The empty graph yields an empty list.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Connectivity of the sub-vertex-set `mask` within g (true for mask == 0
/// only if you consider the empty graph connected; here empty -> false,
/// single vertex -> true).
bool mask_connected(const Graph& g, std::uint64_t mask);

}  // namespace coxeter

#endif
