#include <doctest.h>

#include <cmath>

#include "coxeter/decompose.hpp"
#include "coxeter/enumerate.hpp"
#include "coxeter/errors.hpp"
#include "support/generators.hpp"

using namespace coxeter;

TEST_CASE("rayleigh bound check on tiny cases") {
  Eigen::MatrixXd m(2, 2);
  m << 0, 1, 1, 0;
  Eigen::VectorXd ones(2);
  ones << 1, 1;
  CHECK(rayleigh_bound_check(m, ones, 1.0));  // top eigenvector, equality

  Eigen::VectorXd e1(2);
  e1 << 1, 0;
  CHECK(rayleigh_bound_check(m, e1, 0.0));  // Mv = (0,1) >= 0

  CHECK_FALSE(rayleigh_bound_check(m, ones, 1.5));

  Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
  CHECK_THROWS_AS(rayleigh_bound_check(m, zero, 0.0), DomainError);
  Eigen::VectorXd negative(2);
  negative << 1, -1;
  CHECK_THROWS_AS(rayleigh_bound_check(m, negative, 0.0), DomainError);
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(rayleigh_bound_check(asym, ones, 0.0), DomainError);
}

TEST_CASE("rayleigh bound never breaches on constructed-true instances") {
  // With v >= 0 and mu = min_i (Mv)_i / v_i over the support, the
  // componentwise condition holds by construction, so the eigensolver
  // cross-check must never fire.
  generators::Rng rng(401);
  std::uniform_int_distribution<int> size_pick(1, 6);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  std::uniform_real_distribution<double> coord(0.0, 1.0);
  int trials = 100000;
  for (int trial = 0; trial < trials; ++trial) {
    int n = size_pick(rng);
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) {
        double e = entry(rng);
        m(i, j) = e;
        m(j, i) = e;
      }
    }
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = coord(rng);
    if (v.maxCoeff() <= 0.0) v[0] = 1.0;
    Eigen::VectorXd mv = m * v;
    double mu = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (v[i] > 1e-12) mu = std::min(mu, mv[i] / v[i]);
    }
    if (!std::isfinite(mu)) continue;
    mu -= 1e-12 * std::abs(mu);  // stay on the true side of rounding
    REQUIRE_NOTHROW(rayleigh_bound_check(m, v, mu));
  }
}

TEST_CASE("sign split of a single edge") {
  Graph e = Graph::build({"a", "b"}, {{"a", "b", Bond::finite(3)}});
  SignSplit s = sign_split(e);
  CHECK(s.lambda2 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(s.zero.empty());
  // sign convention makes a positive
  CHECK(s.pos == VertexSet{"a"});
  CHECK(s.neg == VertexSet{"b"});
}

TEST_CASE("sign split of the star-path-star graph isolates the middle vertex") {
  Graph g = generators::star_path_star();
  SignSplit s = sign_split(g);
  CHECK(s.zero == VertexSet{"mid"});
  CHECK(s.pos.size() == 6);
  CHECK(s.neg.size() == 6);
  // each side is exactly one star
  auto side_of = [](const VertexSet& set) { return set.front().substr(0, 1); };
  for (const std::string& v : s.pos) CHECK(v.substr(0, 1) == side_of(s.pos));
  for (const std::string& v : s.neg) CHECK(v.substr(0, 1) == side_of(s.neg));
  CHECK(side_of(s.pos) != side_of(s.neg));
  CHECK(s.lambda2 == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
}

TEST_CASE("sign split honors a caller-provided zero tolerance") {
  // With an absurdly large zero tolerance every coordinate lands in Z.
  Graph g = generators::star_path_star();
  SignSplit loose = sign_split(g, 100.0);
  CHECK(loose.zero.size() == static_cast<size_t>(g.size()));
  CHECK(loose.pos.empty());
  CHECK(loose.neg.empty());
  CHECK(loose.zero_tol == 100.0);
}

TEST_CASE("sign split of K_3 records the degenerate eigenvalue") {
  SignSplit s = sign_split(generators::complete_graph(3));
  CHECK(s.degenerate);
  CHECK_FALSE(s.pos.empty());
  CHECK_FALSE(s.neg.empty());
  CHECK_THROWS_AS(sign_split(Graph::build({"a", "b"}, {})), PreconditionError);
}

TEST_CASE("decomposition certificate for the star-path-star graph") {
  Graph g = generators::star_path_star();
  DecompositionCertificate cert = decompose_higher_rank(g);

  CHECK(cert.part_pos.size() == 6);
  CHECK(cert.part_neg.size() == 6);
  // both parts are stars K_{1,5}: lambda_max = sqrt(5) = lambda2 exactly
  CHECK(cert.lambda_max_pos == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(cert.lambda_max_neg == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
  CHECK(cert.class_pos.cls == CoxeterClass::StronglyHyperbolic);
  CHECK(cert.class_neg.cls == CoxeterClass::StronglyHyperbolic);
  for (double r : cert.residuals_pos) CHECK(r >= -cert.eps);
  for (double r : cert.residuals_neg) CHECK(r >= -cert.eps);
}

TEST_CASE("decomposition rejects graphs that are not connected higher rank") {
  CHECK_THROWS_AS(decompose_higher_rank(generators::complete_graph(4)), PreconditionError);
  Graph disconnected = Graph::build({"a", "b"}, {});
  CHECK_THROWS_AS(decompose_higher_rank(disconnected), PreconditionError);
}

TEST_CASE("disjoint hyperbolic pair existence") {
  CHECK_FALSE(has_disjoint_hyperbolic_pair(generators::complete_graph(4)));
  Graph p3 = Graph::build({"a", "b", "c"},
                          {{"a", "b", Bond::finite(3)}, {"b", "c", Bond::finite(3)}});
  CHECK_FALSE(has_disjoint_hyperbolic_pair(p3));
  CHECK(has_disjoint_hyperbolic_pair(generators::star_path_star()));
  CHECK_THROWS_AS(has_disjoint_hyperbolic_pair(generators::complete_graph(4), 3), ResourceError);
}

TEST_CASE("no disjoint hyperbolic pair really does preclude higher rank on small graphs") {
  for (int n = 1; n <= 7; ++n) {
    long without_pair = 0;
    for (const Graph& g : connected_graphs(n)) {
      if (!has_disjoint_hyperbolic_pair(g)) {
        ++without_pair;
        CHECK(classify(g).cls != CoxeterClass::HigherRank);
      }
    }
    CAPTURE(n);
    CHECK(without_pair > 0);
  }
}

TEST_CASE("separated pair search") {
  Graph sps = generators::star_path_star();
  auto cert = find_separated_hyperbolic_pair(sps);
  REQUIRE(cert.has_value());
  CHECK(cert->x.size() == 6);
  CHECK(cert->y.size() == 6);
  CHECK(cert->whole.cls == CoxeterClass::HigherRank);

  CHECK_FALSE(find_separated_hyperbolic_pair(generators::complete_graph(8)).has_value());
  CHECK_THROWS_AS(find_separated_hyperbolic_pair(generators::complete_graph(6), 4), ResourceError);
}

TEST_CASE("separated search respects the certificate-forces-higher-rank property") {
  generators::Rng rng(402);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = generators::random_connected_labeled_graph(rng, 8, 0.3, {3, 4, Bond::kInfinity});
    auto cert = find_separated_hyperbolic_pair(g);
    if (cert) {
      CHECK(classify(g).cls == CoxeterClass::HigherRank);
    }
  }
}

TEST_CASE("separation certification") {
  Graph sps = generators::star_path_star();
  VertexSet x = {"ac", "a0", "a1", "a2", "a3", "a4"};
  VertexSet y = {"bc", "b0", "b1", "b2", "b3", "b4"};
  SeparationCertificate cert = certify_higher_rank_via_separation(sps, x, y);
  CHECK(cert.whole.cls == CoxeterClass::HigherRank);
  CHECK(cert.class_x.cls == CoxeterClass::StronglyHyperbolic);

  // two K_4 components: block-diagonal case
  std::vector<std::string> verts;
  std::vector<Edge> edges;
  VertexSet cx, cy;
  for (const std::string& side : {"a", "b"}) {
    for (int i = 0; i < 4; ++i) {
      verts.push_back(side + std::to_string(i));
      (side == "a" ? cx : cy).push_back(side + std::to_string(i));
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        edges.push_back(Edge{side + std::to_string(i), side + std::to_string(j), Bond::finite(3)});
      }
    }
  }
  Graph two_k4 = Graph::build(verts, edges);
  SeparationCertificate c2 = certify_higher_rank_via_separation(two_k4, cx, cy);
  CHECK(c2.whole.sig.q == 2);

  // overlapping sets are rejected
  CHECK_THROWS_AS(certify_higher_rank_via_separation(sps, {"ac", "a0"}, {"a0"}), DomainError);
  // adjacent sets are rejected
  CHECK_THROWS_AS(certify_higher_rank_via_separation(sps, x, {"mid"}), DomainError);
  // non-hyperbolic part is rejected
  CHECK_THROWS_AS(certify_higher_rank_via_separation(sps, {"a0"}, y), DomainError);
}

TEST_CASE("decomposition properties over random higher-rank graphs") {
  generators::Rng rng(403);
  int found = 0;
  while (found < 25) {
    Graph g = generators::random_graph_of_class(rng, 6, 10, CoxeterClass::HigherRank);
    DecompositionCertificate cert = decompose_higher_rank(g);
    CHECK_FALSE(cert.split.pos.empty());
    CHECK_FALSE(cert.split.neg.empty());
    for (double r : cert.residuals_pos) CHECK(r >= -1e-8);
    for (double r : cert.residuals_neg) CHECK(r >= -1e-8);
    CHECK(cert.lambda_max_pos >= cert.split.lambda2 - 1e-8);
    CHECK(cert.lambda_max_neg >= cert.split.lambda2 - 1e-8);
    CHECK(cert.class_pos.cls != CoxeterClass::Spherical);
    CHECK(cert.class_pos.cls != CoxeterClass::Affine);
    CHECK(cert.class_neg.cls != CoxeterClass::Spherical);
    CHECK(cert.class_neg.cls != CoxeterClass::Affine);
    ++found;
  }
}
