#include "coxeter/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

#include "coxeter/canonical.hpp"
#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

std::vector<std::string> numbered_vertices(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

void sort_by_canonical_form(std::vector<Graph>& graphs) {
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (Graph& g : graphs) keyed.emplace_back(canonical_form(g), std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  graphs.clear();
  for (auto& [form, g] : keyed) graphs.push_back(std::move(g));
}

// Pair (i, j), i < j, of upper-triangular bit position k in row-major order.
std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

Graph graph_from_edge_mask(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1) {
      edges.push_back(Edge{std::to_string(pairs[k].first), std::to_string(pairs[k].second),
                           Bond::finite(3)});
    }
  }
  return Graph::build(numbered_vertices(n), edges);
}

bool edge_mask_connected(int n, std::uint32_t mask, const std::vector<std::pair<int, int>>& pairs) {
  std::uint32_t adj[8] = {0};
  for (size_t k = 0; k < pairs.size(); ++k) {
    if ((mask >> k) & 1) {
      adj[pairs[k].first] |= (1u << pairs[k].second);
      adj[pairs[k].second] |= (1u << pairs[k].first);
    }
  }
  std::uint32_t all = (1u << n) - 1;
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int i = 0; i < n; ++i) {
      if ((frontier >> i) & 1) next |= adj[i];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > 8) {
    throw DomainError("connected_graphs: n must be between 1 and 8");
  }
  const auto pairs = pair_table(n);
  const int bits = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << bits;

  // Precompute each permutation's action on edge-bit positions.
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> actions;
  std::vector<int> pos(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (size_t k = 0; k < pairs.size(); ++k) {
    pos[static_cast<size_t>(pairs[k].first) * n + pairs[k].second] = static_cast<int>(k);
    pos[static_cast<size_t>(pairs[k].second) * n + pairs[k].first] = static_cast<int>(k);
  }
  do {
    std::vector<int> act(pairs.size());
    for (size_t k = 0; k < pairs.size(); ++k) {
      act[k] = pos[static_cast<size_t>(perm[static_cast<size_t>(pairs[k].first)]) * n +
                   perm[static_cast<size_t>(pairs[k].second)]];
    }
    actions.push_back(std::move(act));
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Scan masks in increasing order.  An unmarked connected mask is the least
  // member of its isomorphism class; expanding its orbit marks the rest.
  std::vector<bool> marked(total, false);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (marked[mask]) continue;
    if (!edge_mask_connected(n, static_cast<std::uint32_t>(mask), pairs)) continue;
    out.push_back(graph_from_edge_mask(n, static_cast<std::uint32_t>(mask), pairs));
    for (const auto& act : actions) {
      std::uint64_t image = 0;
      std::uint64_t rest = mask;
      while (rest) {
        int k = std::countr_zero(rest);
        rest &= rest - 1;
        image |= (std::uint64_t{1} << act[static_cast<size_t>(k)]);
      }
      marked[image] = true;
    }
  }

  sort_by_canonical_form(out);
  return out;
}

std::vector<Graph> free_trees(int n) {
  if (n < 1 || n > 16) {
    throw DomainError("free_trees: n must be between 1 and 16");
  }
  std::vector<Graph> current = {Graph::build({"0"}, {})};
  for (int size = 2; size <= n; ++size) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& tree : current) {
      for (int attach = 0; attach < tree.size(); ++attach) {
        std::vector<std::string> verts = tree.vertices();
        std::string fresh = std::to_string(size - 1);
        verts.push_back(fresh);
        std::vector<Edge> edges = tree.edge_list();
        edges.push_back(Edge{tree.vertex(attach), fresh, Bond::finite(3)});
        Graph candidate = Graph::build(std::move(verts), edges);
        std::string form = canonical_form(candidate);
        if (seen.insert(form).second) next.push_back(std::move(candidate));
      }
    }
    current = std::move(next);
  }
  sort_by_canonical_form(current);
  return current;
}

namespace {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back(Edge{std::to_string(i), std::to_string(i + 1), Bond::finite(3)});
  }
  return Graph::build(numbered_vertices(n), edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(Edge{std::to_string(i), std::to_string((i + 1) % n), Bond::finite(3)});
  }
  return Graph::build(numbered_vertices(n), edges);
}

// Center "c" with legs of the given lengths; leg vertices are named
// "<leg>_<step>".
Graph spider(const std::vector<int>& legs) {
  std::vector<std::string> verts = {"c"};
  std::vector<Edge> edges;
  for (size_t l = 0; l < legs.size(); ++l) {
    std::string prev = "c";
    for (int s = 0; s < legs[l]; ++s) {
      std::string name = std::to_string(l) + "_" + std::to_string(s);
      verts.push_back(name);
      edges.push_back(Edge{prev, name, Bond::finite(3)});
      prev = name;
    }
  }
  return Graph::build(std::move(verts), edges);
}

Graph relabel_with_prefix(const Graph& g, const std::string& prefix) {
  std::vector<std::string> verts;
  verts.reserve(static_cast<size_t>(g.size()));
  for (const std::string& v : g.vertices()) verts.push_back(prefix + v);
  std::vector<Edge> edges;
  for (const Edge& e : g.edge_list()) {
    edges.push_back(Edge{prefix + e.u, prefix + e.v, e.label});
  }
  return Graph::build(std::move(verts), edges);
}

}  // namespace

Graph classical_diagram(DiagramFamily family, int n) {
  switch (family) {
    case DiagramFamily::A:
      if (n < 1) throw DomainError("A_n requires n >= 1");
      return path_graph(n);
    case DiagramFamily::D: {
      if (n < 4) throw DomainError("D_n requires n >= 4");
      // Path 0..n-2 with the extra vertex attached to vertex 1.
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n - 1; ++i) {
        edges.push_back(Edge{std::to_string(i), std::to_string(i + 1), Bond::finite(3)});
      }
      edges.push_back(Edge{std::to_string(1), std::to_string(n - 1), Bond::finite(3)});
      return Graph::build(numbered_vertices(n), edges);
    }
    case DiagramFamily::E: {
      if (n < 6 || n > 8) throw DomainError("E_n requires n in {6, 7, 8}");
      // Path 0..n-2 with the extra vertex attached to vertex 2.
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n - 1; ++i) {
        edges.push_back(Edge{std::to_string(i), std::to_string(i + 1), Bond::finite(3)});
      }
      edges.push_back(Edge{std::to_string(2), std::to_string(n - 1), Bond::finite(3)});
      return Graph::build(numbered_vertices(n), edges);
    }
    case DiagramFamily::ATilde:
      if (n < 2) throw DomainError("ATilde_n requires n >= 2 (the simply laced cycles)");
      return cycle_graph(n + 1);
    case DiagramFamily::DTilde: {
      if (n < 4) throw DomainError("DTilde_n requires n >= 4");
      // n+1 vertices: central path with a fork at each end; DTilde_4 = K_{1,4}.
      int len = n - 3;  // central path length (vertices)
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < len; ++i) {
        edges.push_back(Edge{"p" + std::to_string(i), "p" + std::to_string(i + 1), Bond::finite(3)});
      }
      std::vector<std::string> verts;
      for (int i = 0; i < len; ++i) verts.push_back("p" + std::to_string(i));
      for (const std::string& f : {"a0", "a1"}) {
        verts.push_back(f);
        edges.push_back(Edge{f, "p0", Bond::finite(3)});
      }
      for (const std::string& f : {"b0", "b1"}) {
        verts.push_back(f);
        edges.push_back(Edge{f, "p" + std::to_string(len - 1), Bond::finite(3)});
      }
      return Graph::build(std::move(verts), edges);
    }
    case DiagramFamily::ETilde: {
      if (n < 6 || n > 8) throw DomainError("ETilde_n requires n in {6, 7, 8}");
      if (n == 6) return spider({2, 2, 2});
      if (n == 7) return spider({3, 3, 1});
      return spider({5, 2, 1});
    }
  }
  throw DomainError("unknown diagram family");
}

std::optional<DiagramFamily> diagram_family_from_string(const std::string& name) {
  if (name == "A") return DiagramFamily::A;
  if (name == "D") return DiagramFamily::D;
  if (name == "E") return DiagramFamily::E;
  if (name == "A~" || name == "ATilde") return DiagramFamily::ATilde;
  if (name == "D~" || name == "DTilde") return DiagramFamily::DTilde;
  if (name == "E~" || name == "ETilde") return DiagramFamily::ETilde;
  return std::nullopt;
}

std::vector<std::pair<std::string, Graph>> spherical_affine_diagrams(int max_vertices) {
  std::vector<std::pair<std::string, Graph>> out;
  for (int n = 1; n <= max_vertices; ++n) {
    out.emplace_back("A" + std::to_string(n), classical_diagram(DiagramFamily::A, n));
  }
  for (int n = 4; n <= max_vertices; ++n) {
    out.emplace_back("D" + std::to_string(n), classical_diagram(DiagramFamily::D, n));
  }
  for (int n = 6; n <= std::min(8, max_vertices); ++n) {
    out.emplace_back("E" + std::to_string(n), classical_diagram(DiagramFamily::E, n));
  }
  for (int n = 2; n + 1 <= max_vertices; ++n) {
    out.emplace_back("A~" + std::to_string(n), classical_diagram(DiagramFamily::ATilde, n));
  }
  for (int n = 4; n + 1 <= max_vertices; ++n) {
    out.emplace_back("D~" + std::to_string(n), classical_diagram(DiagramFamily::DTilde, n));
  }
  for (int n = 6; n <= 8 && n + 1 <= max_vertices; ++n) {
    out.emplace_back("E~" + std::to_string(n), classical_diagram(DiagramFamily::ETilde, n));
  }
  return out;
}

Graph figure(const std::string& name) {
  if (name == "fig1") {
    Graph left = relabel_with_prefix(spider({3, 3, 3}), "u");
    Graph right = relabel_with_prefix(spider({3, 3, 3}), "v");
    std::vector<std::string> verts = left.vertices();
    for (const std::string& v : right.vertices()) verts.push_back(v);
    std::vector<Edge> edges = left.edge_list();
    for (const Edge& e : right.edge_list()) edges.push_back(e);
    edges.push_back(Edge{"uc", "vc", Bond::finite(3)});
    return Graph::build(std::move(verts), edges);
  }
  if (name == "fig2") {
    Graph left = relabel_with_prefix(spider({1, 2, 2}), "u");   // u1 and its tree
    Graph right = relabel_with_prefix(spider({1, 2, 2}), "v");
    std::vector<std::string> verts = {"u", "v"};
    for (const std::string& x : left.vertices()) verts.push_back(x);
    for (const std::string& x : right.vertices()) verts.push_back(x);
    std::vector<Edge> edges = {Edge{"u", "v", Bond::finite(3)},
                               Edge{"u", "uc", Bond::finite(3)},
                               Edge{"v", "vc", Bond::finite(3)}};
    for (const Edge& e : left.edge_list()) edges.push_back(e);
    for (const Edge& e : right.edge_list()) edges.push_back(e);
    return Graph::build(std::move(verts), edges);
  }
  if (name == "fig3_example") {
    TripleSpec spec;
    spec.g1 = Graph::build({"x"}, {});
    spec.g2 = Graph::build({"y"}, {});
    spec.g3 = Graph::build({"z"}, {});
    spec.v1 = "x";
    spec.v2 = "y";
    spec.v3 = "z";
    spec.m12 = spec.m13 = spec.m23 = 3;
    return make_subhyperbolic_triple(spec);
  }
  throw DomainError("unknown figure '" + name + "' (expected fig1, fig2 or fig3_example)");
}

Graph make_subhyperbolic_triple(const TripleSpec& spec) {
  const Graph* comps[3] = {&spec.g1, &spec.g2, &spec.g3};
  const std::string* chosen[3] = {&spec.v1, &spec.v2, &spec.v3};
  for (int i = 0; i < 3; ++i) {
    if (comps[i]->empty()) {
      throw DomainError("triple component " + std::to_string(i + 1) + " is empty");
    }
    if (!comps[i]->contains(*chosen[i])) {
      throw DomainError("chosen vertex '" + *chosen[i] + "' is not in component " +
                        std::to_string(i + 1));
    }
    Classification c = classify(*comps[i]);
    if (c.cls != CoxeterClass::Spherical && c.cls != CoxeterClass::Affine) {
      throw DomainError("triple component " + std::to_string(i + 1) + " classifies " +
                        to_string(c.cls) + "; spherical or affine required");
    }
  }
  for (int m : {spec.m12, spec.m13, spec.m23}) {
    if (m < 2) throw DomainError("triple joining labels must be >= 2 or inf");
  }

  std::vector<std::string> verts;
  std::vector<Edge> edges;
  std::string joined[3];
  for (int i = 0; i < 3; ++i) {
    std::string prefix = "g" + std::to_string(i + 1) + "_";
    Graph pg = relabel_with_prefix(*comps[i], prefix);
    for (const std::string& v : pg.vertices()) verts.push_back(v);
    for (const Edge& e : pg.edge_list()) edges.push_back(e);
    joined[i] = prefix + *chosen[i];
  }
  auto add_join = [&](int a, int b, int m) {
    if (m == 2) return;  // no edge
    Bond label = (m == Bond::kInfinity) ? Bond::infinity() : Bond::finite(m);
    edges.push_back(Edge{joined[a], joined[b], label});
  };
  add_join(0, 1, spec.m12);
  add_join(0, 2, spec.m13);
  add_join(1, 2, spec.m23);
  return Graph::build(std::move(verts), edges);
}

std::optional<std::string> cone_vertex_witness(const Graph& g) {
  for (int s = 0; s < g.size(); ++s) {
    std::uint64_t rest =
        (g.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1)) &
        ~(std::uint64_t{1} << s);
    if (rest == 0) return g.vertex(s);  // single vertex: empty remainder qualifies
    Graph remainder = induced_subgraph(g, rest);
    bool ok = true;
    for (const VertexSet& comp : connected_components(remainder)) {
      Classification c = classify(induced_subgraph(remainder, comp));
      if (c.cls != CoxeterClass::Spherical && c.cls != CoxeterClass::Affine) {
        ok = false;
        break;
      }
    }
    if (ok) return g.vertex(s);
  }
  return std::nullopt;
}

namespace {

void tally(CorpusReport& report, const Graph& g) {
  Classification c = classify(g);
  report.max_n = std::max(report.max_n, g.size());
  ++report.per_size_counts[g.size()];
  ++report.class_tallies[to_string(c.cls)];
  ++report.total;
  if (!c.exact) report.exact = false;
  if (c.cls == CoxeterClass::HigherRank) {
    report.higher_rank_witnesses.push_back(canonical_form(g));
  }
}

}  // namespace

CorpusReport verify_corpus(const std::vector<Graph>& corpus) {
  CorpusReport report;
  for (const Graph& g : corpus) tally(report, g);
  return report;
}

CorpusReport sweep_subhyperbolic_triples(int max_component_vertices) {
  if (max_component_vertices < 1 || max_component_vertices > 8) {
    throw DomainError("triple sweep: component size must be between 1 and 8");
  }
  const auto catalog = spherical_affine_diagrams(max_component_vertices);
  const int labels[4] = {2, 3, 4, Bond::kInfinity};

  CorpusReport report;
  for (const auto& [n1, g1] : catalog) {
    for (const auto& [n2, g2] : catalog) {
      for (const auto& [n3, g3] : catalog) {
        for (const std::string& v1 : g1.vertices()) {
          for (const std::string& v2 : g2.vertices()) {
            for (const std::string& v3 : g3.vertices()) {
              for (int m12 : labels) {
                for (int m13 : labels) {
                  for (int m23 : labels) {
                    TripleSpec spec{g1, g2, g3, v1, v2, v3, m12, m13, m23};
                    tally(report, make_subhyperbolic_triple(spec));
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace coxeter
