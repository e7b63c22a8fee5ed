#ifndef COXETER_DECOMPOSE_HPP
#define COXETER_DECOMPOSE_HPP

#include <optional>

#include "coxeter/graph.hpp"
#include "coxeter/spectral.hpp"

namespace coxeter {

/// Default subgraph-search size bound; beyond it exhaustive subset searches
/// refuse with ResourceError instead of sampling.
constexpr int kDefaultSearchBound = 20;

/// Certificate tolerance at size n for a matrix with entries bounded by
/// max_abs: 1e-8 * n * max_abs.
double certificate_tolerance(int n, double max_abs);

/// Componentwise Rayleigh bound: true iff (M v)_i >= mu * v_i - eps for all
/// i.  Requires M symmetric and v nonzero with nonnegative entries (the
/// hypothesis under which a true result implies lambda_max(M) >= mu).  That
/// implication is cross-checked against the eigensolver; if the inequality
/// passes componentwise while lambda_max(M) < mu - eps, the call throws
/// InvariantBreachError, which indicates a numerics bug rather than bad
/// input.  Pass eps < 0 for the size default.
bool rayleigh_bound_check(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double mu,
                          double eps = -1.0);

/// Partition of a connected graph's vertices by the sign of the second
/// eigenvector: pos where the coordinate exceeds zero_tol, neg below
/// -zero_tol, the rest in zero.  zero_tol <= 0 selects the default
/// 1e-9 * |v2|_inf.  `degenerate` records whether lambda2 is within tau of
/// lambda3, in which case the split used the solver's eigenvector choice.
struct SignSplit {
  VertexSet pos;
  VertexSet neg;
  VertexSet zero;
  Label v2;
  double lambda2 = 0.0;
  bool degenerate = false;
  double zero_tol = 0.0;
};

SignSplit sign_split(const Graph& g, double zero_tol = -1.0);

/// Certificate that a connected higher-rank graph decomposes along the sign
/// split into disjoint induced subgraphs that are each hyperbolic or higher
/// rank.  residuals_* hold (A_P x)_i - lambda2 * x_i per vertex (with the
/// negated inherited values on the negative side); validity requires every
/// residual >= -eps and lambda_max of each part >= lambda2 - eps.
struct DecompositionCertificate {
  SignSplit split;
  Graph part_pos;
  Graph part_neg;
  Label label_pos;       // inherited second-eigenvector values on pos
  Label label_neg;       // inherited values on neg (negative numbers)
  std::vector<double> residuals_pos;
  std::vector<double> residuals_neg;
  double lambda_max_pos = 0.0;
  double lambda_max_neg = 0.0;
  Classification class_pos;
  Classification class_neg;
  double eps = 0.0;
};

DecompositionCertificate decompose_higher_rank(const Graph& g);

/// True iff the graph contains a pair of connected, disjoint induced
/// subgraphs each classifying hyperbolic or higher rank.  A false answer
/// certifies the graph is not higher rank.  Exhaustive over all vertex
/// subsets; sizes above the bound are a ResourceError.
bool has_disjoint_hyperbolic_pair(const Graph& g, int search_bound = kDefaultSearchBound);

/// Witness that two separated induced subgraphs are each hyperbolic, which
/// forces the whole graph higher rank.
struct SeparationCertificate {
  VertexSet x;
  VertexSet y;
  Classification class_x;
  Classification class_y;
  Classification whole;
};

/// Searches for a separated pair of induced hyperbolic subgraphs.  It
/// suffices to search pairs of connected induced hyperbolic subgraphs: a
/// hyperbolic induced subgraph has exactly one hyperbolic connected
/// component (the other components carry no negative eigenvalue), and that
/// component stays separated from the partner.  Deterministic: among all
/// valid pairs the one minimizing (|X| + |Y|, canonical form of the union
/// subgraph, vertex masks) is returned.
std::optional<SeparationCertificate> find_separated_hyperbolic_pair(
    const Graph& g, int search_bound = kDefaultSearchBound);

/// Validates the given separated hyperbolic pair and certifies the whole
/// graph higher rank, failing loudly (InvariantBreachError) if the spectral
/// classification disagrees.
SeparationCertificate certify_higher_rank_via_separation(const Graph& g, const VertexSet& x,
                                                         const VertexSet& y);

}  // namespace coxeter

#endif
