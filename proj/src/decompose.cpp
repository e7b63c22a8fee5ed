#include "coxeter/decompose.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "coxeter/canonical.hpp"
#include "coxeter/errors.hpp"

namespace coxeter {

double certificate_tolerance(int n, double max_abs) {
  return 1e-8 * static_cast<double>(n) * max_abs;
}

bool rayleigh_bound_check(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double mu,
                          double eps) {
  if (m.rows() != m.cols()) throw DomainError("rayleigh_bound_check: matrix must be square");
  if (!m.isApprox(m.transpose(), 0.0)) throw DomainError("rayleigh_bound_check: matrix is not symmetric");
  if (v.size() != m.rows()) throw DomainError("rayleigh_bound_check: vector length mismatch");
  if (v.isZero(0.0)) throw DomainError("rayleigh_bound_check: vector is zero");
  if (v.minCoeff() < 0.0) {
    throw DomainError("rayleigh_bound_check: vector must be componentwise nonnegative");
  }
  if (eps < 0.0) eps = certificate_tolerance(static_cast<int>(m.rows()), m.cwiseAbs().maxCoeff());

  Eigen::VectorXd mv = m * v;
  bool ok = ((mv - mu * v).array() >= -eps).all();
  if (ok) {
    double lambda_max = spectrum_values(m)[0];
    if (lambda_max < mu - eps) {
      throw InvariantBreachError(
          "componentwise bound holds but lambda_max = " + std::to_string(lambda_max) +
          " < mu = " + std::to_string(mu));
    }
  }
  return ok;
}

SignSplit sign_split(const Graph& g, double zero_tol) {
  if (g.size() < 2) throw PreconditionError("sign_split: graph must have at least 2 vertices");
  if (!is_connected(g)) throw PreconditionError("sign_split: graph must be connected");

  double tau = default_tolerance(g.size());
  Spectrum s = spectrum(generalized_adjacency(g), tau);
  Eigen::VectorXd v2 = s.vectors.col(1);
  if (zero_tol <= 0.0) zero_tol = 1e-9 * v2.cwiseAbs().maxCoeff();

  SignSplit out;
  out.lambda2 = s.values[1];
  out.degenerate = g.size() >= 3 && std::abs(s.values[1] - s.values[2]) <= tau;
  out.zero_tol = zero_tol;
  out.v2 = label_from_vector(g, v2);
  for (int i = 0; i < g.size(); ++i) {
    if (v2[i] > zero_tol) {
      out.pos.push_back(g.vertex(i));
    } else if (v2[i] < -zero_tol) {
      out.neg.push_back(g.vertex(i));
    } else {
      out.zero.push_back(g.vertex(i));
    }
  }
  return out;
}

namespace {

// Residuals (A x)_i - mu x_i for one side of the split, with x the inherited
// eigenvector values (negated on the negative side so they are positive).
std::vector<double> side_residuals(const Graph& part, const Label& inherited, double mu,
                                   double sign, double eps) {
  Eigen::VectorXd x = sign * label_to_vector(part, inherited);
  Eigen::MatrixXd a = generalized_adjacency(part);
  if (!rayleigh_bound_check(a, x, mu, eps)) {
    throw InvariantBreachError("sign-split part violates the componentwise eigenvalue bound");
  }
  Eigen::VectorXd res = a * x - mu * x;
  return std::vector<double>(res.data(), res.data() + res.size());
}

}  // namespace

DecompositionCertificate decompose_higher_rank(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("decompose_higher_rank: graph must be connected");
  }
  Classification whole = classify(g);
  if (whole.cls != CoxeterClass::HigherRank) {
    throw PreconditionError("decompose_higher_rank: graph classifies " + to_string(whole.cls) +
                            "; higher rank required");
  }

  DecompositionCertificate cert;
  cert.split = sign_split(g);
  if (cert.split.pos.empty() || cert.split.neg.empty()) {
    throw InvariantBreachError("second eigenvector of a higher-rank graph lost a sign class");
  }
  cert.eps = certificate_tolerance(g.size(), generalized_adjacency(g).cwiseAbs().maxCoeff());
  cert.part_pos = induced_subgraph(g, cert.split.pos);
  cert.part_neg = induced_subgraph(g, cert.split.neg);
  cert.label_pos = restrict_label(cert.split.v2, cert.split.pos);
  cert.label_neg = restrict_label(cert.split.v2, cert.split.neg);

  double mu = cert.split.lambda2;
  cert.residuals_pos = side_residuals(cert.part_pos, cert.label_pos, mu, +1.0, cert.eps);
  cert.residuals_neg = side_residuals(cert.part_neg, cert.label_neg, mu, -1.0, cert.eps);

  cert.lambda_max_pos = spectrum_values(generalized_adjacency(cert.part_pos))[0];
  cert.lambda_max_neg = spectrum_values(generalized_adjacency(cert.part_neg))[0];
  if (cert.lambda_max_pos < mu - cert.eps || cert.lambda_max_neg < mu - cert.eps) {
    throw InvariantBreachError("a sign-split part has top eigenvalue below lambda2");
  }

  cert.class_pos = classify(cert.part_pos);
  cert.class_neg = classify(cert.part_neg);
  for (const Classification* c : {&cert.class_pos, &cert.class_neg}) {
    if (c->cls == CoxeterClass::Spherical || c->cls == CoxeterClass::Affine) {
      throw InvariantBreachError("a sign-split part classifies " + to_string(c->cls) +
                                 "; hyperbolic or higher rank expected");
    }
  }
  return cert;
}

namespace {

void check_search_bound(const Graph& g, int search_bound, const char* op) {
  if (g.size() > search_bound) {
    throw ResourceError(std::string(op) + ": graph has " + std::to_string(g.size()) +
                        " vertices, above the exhaustive search bound " +
                        std::to_string(search_bound) + "; raise the bound explicitly to proceed");
  }
}

bool mask_class_is(const Graph& g, std::uint64_t mask, bool allow_higher_rank) {
  Classification c = classify(induced_subgraph(g, mask));
  if (c.cls == CoxeterClass::StronglyHyperbolic || c.cls == CoxeterClass::WeaklyHyperbolic) {
    return true;
  }
  return allow_higher_rank && c.cls == CoxeterClass::HigherRank;
}

// All vertex subsets inducing connected subgraphs that pass the class
// filter, in increasing mask order.
std::vector<std::uint64_t> connected_filtered_masks(const Graph& g, bool allow_higher_rank) {
  std::vector<std::uint64_t> out;
  std::uint64_t all = (g.size() == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.size()) - 1);
  for (std::uint64_t mask = 1; mask <= all; ++mask) {
    if (!mask_connected(g, mask)) continue;
    if (mask_class_is(g, mask, allow_higher_rank)) out.push_back(mask);
  }
  return out;
}

}  // namespace

bool has_disjoint_hyperbolic_pair(const Graph& g, int search_bound) {
  check_search_bound(g, search_bound, "has_disjoint_hyperbolic_pair");
  if (g.empty()) return false;
  std::vector<std::uint64_t> candidates = connected_filtered_masks(g, /*allow_higher_rank=*/true);
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      if ((candidates[i] & candidates[j]) == 0) return true;
    }
  }
  return false;
}

std::optional<SeparationCertificate> find_separated_hyperbolic_pair(const Graph& g,
                                                                    int search_bound) {
  check_search_bound(g, search_bound, "find_separated_hyperbolic_pair");
  if (g.empty()) return std::nullopt;
  std::vector<std::uint64_t> candidates = connected_filtered_masks(g, /*allow_higher_rank=*/false);

  // Deterministic choice: smallest (|X|+|Y|, canonical form of the union,
  // mask pair).  Candidates are grouped by total size first so canonical
  // forms are only computed for the minimal size class.
  struct Pair {
    std::uint64_t x;
    std::uint64_t y;
  };
  std::vector<Pair> best_size_pairs;
  int best_total = -1;
  for (size_t i = 0; i < candidates.size(); ++i) {
    for (size_t j = i + 1; j < candidates.size(); ++j) {
      std::uint64_t a = candidates[i];
      std::uint64_t b = candidates[j];
      if (!are_separated_masks(g, a, b)) continue;
      int total = std::popcount(a) + std::popcount(b);
      if (best_total < 0 || total < best_total) {
        best_total = total;
        best_size_pairs.clear();
      }
      if (total == best_total) best_size_pairs.push_back(Pair{std::min(a, b), std::max(a, b)});
    }
  }
  if (best_size_pairs.empty()) return std::nullopt;

  const Pair* best = nullptr;
  std::string best_form;
  for (const Pair& p : best_size_pairs) {
    std::string form = canonical_form(induced_subgraph(g, p.x | p.y));
    if (best == nullptr || std::tie(form, p.x, p.y) < std::tie(best_form, best->x, best->y)) {
      best = &p;
      best_form = std::move(form);
    }
  }
  return certify_higher_rank_via_separation(g, vertices_from_mask(g, best->x),
                                            vertices_from_mask(g, best->y));
}

SeparationCertificate certify_higher_rank_via_separation(const Graph& g, const VertexSet& x,
                                                         const VertexSet& y) {
  std::uint64_t mx = vertex_mask(g, x);
  std::uint64_t my = vertex_mask(g, y);
  if (mx == 0 || my == 0) throw DomainError("separated pair: subsets must be nonempty");
  if (mx & my) throw DomainError("separated pair: subsets share a vertex");
  if (!are_separated_masks(g, mx, my)) {
    throw DomainError("separated pair: an edge joins the two subsets");
  }

  SeparationCertificate cert;
  cert.x = vertices_from_mask(g, mx);
  cert.y = vertices_from_mask(g, my);
  cert.class_x = classify(induced_subgraph(g, mx));
  cert.class_y = classify(induced_subgraph(g, my));
  for (const auto& [name, c] : {std::pair{"first", &cert.class_x}, std::pair{"second", &cert.class_y}}) {
    if (c->cls != CoxeterClass::StronglyHyperbolic && c->cls != CoxeterClass::WeaklyHyperbolic) {
      throw DomainError(std::string("separated pair: the ") + name + " subgraph classifies " +
                        to_string(c->cls) + "; hyperbolic required");
    }
  }
  cert.whole = classify(g);
  if (cert.whole.cls != CoxeterClass::HigherRank) {
    throw InvariantBreachError(
        "separated hyperbolic subgraphs found but the whole graph classifies " +
        to_string(cert.whole.cls));
  }
  return cert;
}

}  // namespace coxeter
