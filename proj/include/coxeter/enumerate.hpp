#ifndef COXETER_ENUMERATE_HPP
#define COXETER_ENUMERATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/spectral.hpp"

namespace coxeter {

/// One representative per isomorphism class of connected simple unlabeled
/// graphs on n vertices (all bonds m = 3), sorted by canonical form.
/// Enumerates all upper-triangular edge bitmasks with a connectivity filter
/// and canonical dedup, so n is capped at 8 (2^28 masks).
std::vector<Graph> connected_graphs(int n);

/// One representative per isomorphism class of unlabeled trees on n
/// vertices (bonds m = 3), sorted by canonical form.  Grown by leaf
/// extension from the (n-1)-vertex corpus with canonical dedup; n <= 16.
std::vector<Graph> free_trees(int n);

enum class DiagramFamily { A, D, E, ATilde, DTilde, ETilde };

/// The named simply laced diagram: A_n (n >= 1), D_n (n >= 4),
/// E_n (n in {6,7,8}), ATilde_n = the (n+1)-cycle (n >= 2), DTilde_n
/// (n >= 4, n+1 vertices, DTilde_4 = K_{1,4}), ETilde_n (n in {6,7,8},
/// n+1 vertices).  Invalid combinations are a DomainError.
Graph classical_diagram(DiagramFamily family, int n);

std::optional<DiagramFamily> diagram_family_from_string(const std::string& name);

/// All spherical and affine simply laced diagrams with at most max_vertices
/// vertices, as (name, graph) pairs in a deterministic order.
std::vector<std::pair<std::string, Graph>> spherical_affine_diagrams(int max_vertices);

/// Named fixture graphs:
///   fig1          two 10-vertex spiders (center with three 3-vertex legs)
///                 joined center to center, all m = 3 (20 vertices);
///   fig2          the 14-vertex tree u-v with a 6-vertex tree hanging off
///                 each of u and v;
///   fig3_example  triangle built as a triple of three single vertices with
///                 all joining bonds m = 3.
Graph figure(const std::string& name);

/// Three spherical-or-affine component graphs, one chosen vertex in each,
/// and pairwise joining labels (m = 2 meaning no edge).
struct TripleSpec {
  Graph g1, g2, g3;
  std::string v1, v2, v3;
  int m12 = 2;  // 2, finite >= 3, or Bond::kInfinity
  int m13 = 2;
  int m23 = 2;
};

/// Disjoint union of the three components plus the chosen joining edges.
/// Component vertices are prefixed g1_/g2_/g3_.  A component that does not
/// classify spherical or affine is a DomainError naming the offender.
Graph make_subhyperbolic_triple(const TripleSpec& spec);

/// Some vertex whose removal leaves only spherical or affine components, if
/// one exists; least vertex index wins.
std::optional<std::string> cone_vertex_witness(const Graph& g);

struct CorpusReport {
  int max_n = 0;                         // largest size seen
  std::map<int, long> per_size_counts;
  std::map<std::string, long> class_tallies;
  std::vector<std::string> higher_rank_witnesses;  // canonical forms
  bool exact = true;                     // every classification took the exact path
  long total = 0;

  bool verified() const { return higher_rank_witnesses.empty(); }
};

/// Classifies every graph, tallies classes and sizes, and records any
/// higher-rank witnesses by canonical form.
CorpusReport verify_corpus(const std::vector<Graph>& corpus);

/// Exhaustive sweep over subhyperbolic triples: components run over all
/// spherical/affine simply laced diagrams with at most max_component_vertices
/// vertices, chosen vertices over every vertex, joining labels over
/// {2, 3, 4, inf}.  Tallies classifications like verify_corpus without
/// materializing the corpus.
CorpusReport sweep_subhyperbolic_triples(int max_component_vertices);

}  // namespace coxeter

#endif
