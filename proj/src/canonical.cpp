#include "coxeter/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "coxeter/errors.hpp"

namespace coxeter {
namespace {

// Total order on pair states: no edge < m=3 < m=4 < ... < infinity.
constexpr std::uint32_t kNoEdge = 0;
constexpr std::uint32_t kInfCode = 0xFFFFFFFFu;

std::uint32_t bond_code(const std::optional<Bond>& b) {
  if (!b) return kNoEdge;
  if (b->infinite()) return kInfCode;
  return static_cast<std::uint32_t>(b->m);
}

std::vector<std::uint32_t> code_matrix(const Graph& g) {
  int n = g.size();
  std::vector<std::uint32_t> codes(static_cast<size_t>(n) * static_cast<size_t>(n), kNoEdge);
  for (const auto& [key, label] : g.edges()) {
    std::uint32_t c = bond_code(label);
    codes[static_cast<size_t>(key.first) * n + key.second] = c;
    codes[static_cast<size_t>(key.second) * n + key.first] = c;
  }
  return codes;
}

std::string bond_code_to_string(std::uint32_t c) {
  return c == kInfCode ? "inf" : std::to_string(c);
}

// Emits "n<k>;u-v:m;..." for the graph placed by `placement`, where
// placement[position] = original vertex index.
std::string emit_placed(const Graph& g, const std::vector<int>& placement) {
  int n = g.size();
  std::vector<int> pos_of(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) pos_of[static_cast<size_t>(placement[static_cast<size_t>(p)])] = p;
  std::vector<std::pair<std::pair<int, int>, Bond>> edges;
  edges.reserve(g.edges().size());
  for (const auto& [key, label] : g.edges()) {
    auto pq = std::minmax(pos_of[static_cast<size_t>(key.first)],
                          pos_of[static_cast<size_t>(key.second)]);
    edges.emplace_back(pq, label);
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::ostringstream out;
  out << 'n' << n;
  for (const auto& [pq, label] : edges) {
    out << ';' << pq.first << '-' << pq.second << ':' << bond_to_string(label);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Forest path: rooted canonical encodings, centers by leaf stripping.
// ---------------------------------------------------------------------------

struct ForestCanon {
  const Graph& g;
  std::vector<std::uint32_t> codes;

  explicit ForestCanon(const Graph& graph) : g(graph), codes(code_matrix(graph)) {}

  std::uint32_t code(int i, int j) const {
    return codes[static_cast<size_t>(i) * g.size() + j];
  }

  std::string encode_rooted(int v, int parent) const {
    std::vector<std::string> kids;
    for (int u = 0; u < g.size(); ++u) {
      if (u != parent && code(v, u) != kNoEdge) {
        kids.push_back("[" + bond_code_to_string(code(v, u)) + encode_rooted(u, v) + "]");
      }
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const std::string& k : kids) out += k;
    out += ")";
    return out;
  }

  // Centers of the component containing `start` (one or two vertices).
  std::vector<int> centers(const std::vector<int>& component) const {
    std::map<int, int> degree;
    for (int v : component) {
      int d = 0;
      for (int u : component) {
        if (u != v && code(v, u) != kNoEdge) ++d;
      }
      degree[v] = d;
    }
    std::vector<int> alive = component;
    while (alive.size() > 2) {
      std::vector<int> leaves;
      for (int v : alive) {
        if (degree[v] <= 1) leaves.push_back(v);
      }
      std::vector<int> next;
      for (int v : alive) {
        if (degree[v] > 1) next.push_back(v);
      }
      for (int leaf : leaves) {
        for (int u : next) {
          if (code(leaf, u) != kNoEdge) --degree[u];
        }
      }
      alive = std::move(next);
    }
    return alive;
  }

  // Preorder index assignment, children in (label, encoding) order.
  void assign(int v, int parent, int& next_index, std::vector<int>& canon_index) const {
    canon_index[static_cast<size_t>(v)] = next_index++;
    std::vector<std::tuple<std::uint32_t, std::string, int>> kids;
    for (int u = 0; u < g.size(); ++u) {
      if (u != parent && code(v, u) != kNoEdge) {
        kids.emplace_back(code(v, u), encode_rooted(u, v), u);
      }
    }
    std::sort(kids.begin(), kids.end());
    for (const auto& [c, enc, u] : kids) assign(u, v, next_index, canon_index);
  }
};

std::string forest_canonical(const Graph& g) {
  ForestCanon fc(g);
  std::vector<std::vector<int>> comps;
  for (const VertexSet& names : connected_components(g)) {
    std::vector<int> comp;
    comp.reserve(names.size());
    for (const std::string& name : names) comp.push_back(g.index_of(name));
    comps.push_back(std::move(comp));
  }

  struct CompInfo {
    std::string encoding;
    int root;
  };
  std::vector<CompInfo> infos;
  for (const auto& comp : comps) {
    std::vector<int> cs = fc.centers(comp);
    CompInfo best{"", -1};
    for (int c : cs) {
      std::string enc = fc.encode_rooted(c, -1);
      if (best.root < 0 || enc < best.encoding) best = CompInfo{std::move(enc), c};
    }
    infos.push_back(std::move(best));
  }
  std::sort(infos.begin(), infos.end(),
            [](const CompInfo& a, const CompInfo& b) { return a.encoding < b.encoding; });

  std::vector<int> canon_index(static_cast<size_t>(g.size()), -1);
  int next = 0;
  for (const CompInfo& info : infos) fc.assign(info.root, -1, next, canon_index);

  // canon_index is position-of-vertex; emit_placed wants vertex-at-position.
  std::vector<int> placement(static_cast<size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) placement[static_cast<size_t>(canon_index[static_cast<size_t>(v)])] = v;
  return emit_placed(g, placement);
}

// ---------------------------------------------------------------------------
// Exhaustive path: minimize the upper-triangular code sequence over all
// vertex placements.
// ---------------------------------------------------------------------------

std::string minimized_canonical(const Graph& g) {
  int n = g.size();
  std::vector<std::uint32_t> codes = code_matrix(g);
  auto code = [&](int i, int j) { return codes[static_cast<size_t>(i) * n + j]; };

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  std::vector<std::uint32_t> best_seq;
  best_seq.reserve(static_cast<size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) best_seq.push_back(code(i, j));
  }

  std::vector<std::uint32_t> seq(best_seq.size());
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool smaller = false;
    size_t k = 0;
    for (int i = 0; i < n && !smaller; ++i) {
      for (int j = i + 1; j < n; ++j, ++k) {
        std::uint32_t c = code(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
        seq[k] = c;
        if (c < best_seq[k]) {
          smaller = true;
          // fill the rest before swapping buffers
          size_t kk = k + 1;
          for (int a = i; a < n; ++a) {
            for (int b = (a == i ? j + 1 : a + 1); b < n; ++b, ++kk) {
              seq[kk] = code(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]);
            }
          }
          break;
        }
        if (c > best_seq[k]) {
          i = n;  // abandon this permutation
          break;
        }
      }
    }
    if (smaller) {
      best_seq = seq;
      best = perm;
    }
  }
  return emit_placed(g, best);
}

// ---------------------------------------------------------------------------
// Refinement path: equitable partition refinement + individualization
// backtracking; canonical form is the minimum encoding over all leaves.
// ---------------------------------------------------------------------------

using Partition = std::vector<std::vector<int>>;

struct Refiner {
  const Graph& g;
  std::vector<std::uint32_t> codes;

  explicit Refiner(const Graph& graph) : g(graph), codes(code_matrix(graph)) {}

  std::uint32_t code(int i, int j) const {
    return codes[static_cast<size_t>(i) * g.size() + j];
  }

  // Splits cells by edge-code counts into every cell until equitable.  New
  // fragments are ordered by key, which depends only on the partition and
  // the graph, so refinement commutes with isomorphism.
  void refine(Partition& part) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t splitter = 0; splitter < part.size() && !changed; ++splitter) {
        for (size_t target = 0; target < part.size(); ++target) {
          if (part[target].size() <= 1) continue;
          std::map<std::vector<std::uint32_t>, std::vector<int>> groups;
          for (int v : part[target]) {
            std::vector<std::uint32_t> key;
            for (int u : part[splitter]) {
              if (u != v) key.push_back(code(v, u));
            }
            std::sort(key.begin(), key.end());
            groups[key].push_back(v);
          }
          if (groups.size() > 1) {
            Partition next;
            next.reserve(part.size() + groups.size() - 1);
            for (size_t i = 0; i < part.size(); ++i) {
              if (i == target) {
                for (auto& [key, cell] : groups) next.push_back(std::move(cell));
              } else {
                next.push_back(std::move(part[i]));
              }
            }
            part = std::move(next);
            changed = true;
            break;
          }
        }
      }
    }
  }

  void search(Partition part, std::vector<std::uint32_t>& best_seq,
              std::vector<int>& best_placement) const {
    refine(part);
    size_t branch_cell = part.size();
    for (size_t i = 0; i < part.size(); ++i) {
      if (part[i].size() > 1) {
        branch_cell = i;
        break;
      }
    }
    if (branch_cell == part.size()) {
      int n = g.size();
      std::vector<int> placement;
      placement.reserve(static_cast<size_t>(n));
      for (const auto& cell : part) placement.push_back(cell.front());
      std::vector<std::uint32_t> seq;
      seq.reserve(static_cast<size_t>(n * (n - 1) / 2));
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          seq.push_back(code(placement[static_cast<size_t>(i)], placement[static_cast<size_t>(j)]));
        }
      }
      if (best_placement.empty() || seq < best_seq) {
        best_seq = std::move(seq);
        best_placement = std::move(placement);
      }
      return;
    }
    for (int v : part[branch_cell]) {
      Partition next;
      next.reserve(part.size() + 1);
      for (size_t i = 0; i < part.size(); ++i) {
        if (i == branch_cell) {
          next.push_back({v});
          std::vector<int> rest;
          for (int u : part[i]) {
            if (u != v) rest.push_back(u);
          }
          next.push_back(std::move(rest));
        } else {
          next.push_back(part[i]);
        }
      }
      search(std::move(next), best_seq, best_placement);
    }
  }
};

std::string refined_canonical(const Graph& g) {
  Refiner r(g);
  std::vector<int> all(static_cast<size_t>(g.size()));
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::uint32_t> best_seq;
  std::vector<int> best_placement;
  r.search(Partition{all}, best_seq, best_placement);
  return emit_placed(g, best_placement);
}

}  // namespace

namespace detail {

bool is_forest(const Graph& g) {
  // Acyclic iff every component has exactly size-1 edges.
  size_t component_edges = 0;
  size_t vertices = 0;
  auto comps = connected_components(g);
  for (const VertexSet& comp : comps) vertices += comp.size();
  (void)vertices;
  component_edges = g.edges().size();
  return component_edges + comps.size() == static_cast<size_t>(g.size());
}

std::string canonical_form_forest(const Graph& g) { return forest_canonical(g); }
std::string canonical_form_minimized(const Graph& g) { return minimized_canonical(g); }
std::string canonical_form_refined(const Graph& g) { return refined_canonical(g); }

}  // namespace detail

std::string canonical_form(const Graph& g) {
  if (g.empty()) return "n0";
  if (detail::is_forest(g)) return detail::canonical_form_forest(g);
  if (g.size() <= 8) return detail::canonical_form_minimized(g);
  return detail::canonical_form_refined(g);
}

Graph graph_from_canonical_form(const std::string& form) {
  if (form.empty() || form[0] != 'n') throw DomainError("bad canonical form: " + form);
  std::istringstream in(form.substr(1));
  int n = 0;
  char sep = 0;
  if (!(in >> n) || n < 0) throw DomainError("bad canonical form: " + form);
  std::vector<std::string> verts;
  verts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) verts.push_back(std::to_string(i));
  std::vector<Edge> edges;
  while (in >> sep) {
    if (sep != ';') throw DomainError("bad canonical form: " + form);
    int u = 0, v = 0;
    char dash = 0, colon = 0;
    if (!(in >> u >> dash >> v >> colon) || dash != '-' || colon != ':') {
      throw DomainError("bad canonical form: " + form);
    }
    std::string label;
    while (in.peek() != ';' && in.peek() != EOF) label.push_back(static_cast<char>(in.get()));
    Bond b = (label == "inf") ? Bond::infinity() : Bond::finite(std::stoi(label));
    edges.push_back(Edge{std::to_string(u), std::to_string(v), b});
  }
  return Graph::build(std::move(verts), edges);
}

}  // namespace coxeter
