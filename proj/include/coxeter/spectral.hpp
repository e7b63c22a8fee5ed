#ifndef COXETER_SPECTRAL_HPP
#define COXETER_SPECTRAL_HPP

#include <Eigen/Dense>
#include <string>

#include "coxeter/graph.hpp"

namespace coxeter {

/// Dense symmetric matrix of the canonical bilinear form: C_ii = 2 and
/// C_ij = -2 cos(pi / m_ij), so entries lie in [-2, 0] off the diagonal.
/// Row order is the source graph's vertex order.
using FormMatrix = Eigen::MatrixXd;

/// A = 2I - C.  Nonnegative, zero diagonal; equals the 0/1 adjacency matrix
/// for simply laced graphs, with an infinite bond contributing exactly 2.
using AdjacencyMatrix = Eigen::MatrixXd;

/// Default tolerance for "equals 2" decisions at size n.
double default_tolerance(int n);

FormMatrix form_matrix(const Graph& g);
AdjacencyMatrix generalized_adjacency(const Graph& g);

/// Eigendecomposition of a symmetric matrix, eigenvalues descending, each
/// eigenvector normalized with its first nonzero coordinate positive.
/// Construction verifies |A v_i - lambda_i v_i|_inf <= 1e-8 * n * max|A|
/// and throws ComputationError otherwise.
struct Spectrum {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column i pairs with values[i]
  double tau = 0.0;
  double residual = 0.0;    // measured reconstruction residual

  int size() const { return static_cast<int>(values.size()); }
};

Spectrum spectrum(const AdjacencyMatrix& a, double tau);

/// Descending eigenvalues only (cheaper when vectors are not needed).
Eigen::VectorXd spectrum_values(const AdjacencyMatrix& a);

/// Counts (p, q, r) of positive, negative and zero eigenvalues of the form
/// matrix.  `exact` is set when the counts came from exact rational
/// elimination rather than a floating zero band.
struct Signature {
  int p = 0;
  int q = 0;
  int r = 0;
  bool exact = false;

  int total() const { return p + q + r; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a form matrix.  When the matrix is integer valued (every
/// bond in {2, 3, inf}) the counts are computed exactly over the rationals;
/// otherwise they come from the spectrum of 2I - C with zero band
/// |2 - lambda| <= tau.  Pass tau <= 0 for the size default.
Signature inertia(const FormMatrix& c, double tau = -1.0);

enum class CoxeterClass {
  Spherical,
  WeaklyHyperbolic,
  StronglyHyperbolic,
  Affine,
  HigherRank,
};

std::string to_string(CoxeterClass c);

/// Five-way classification from the signature: q = 0 splits spherical/affine
/// on r, q = 1 splits strongly/weakly hyperbolic on r, q >= 2 is higher rank.
CoxeterClass class_from_signature(const Signature& s);

struct Classification {
  CoxeterClass cls = CoxeterClass::Spherical;
  Signature sig;
  double lambda1 = 0.0;
  double lambda2 = 0.0;  // meaningful only when n >= 2
  int n = 0;
  bool exact = false;        // signature came from the exact integer path
  bool approximate = false;  // a float eigenvalue fell inside the tau band
  double tau = 0.0;
};

/// Classifies a nonempty graph (connectivity not required; the definition is
/// purely spectral).  Pass tau <= 0 for the size default 1e-8 * n.
Classification classify(const Graph& g, double tau = -1.0);

/// A map vertex -> real value, aligned with an explicit vertex list.
struct Label {
  std::vector<std::string> vertices;
  std::vector<double> values;

  double value_of(const std::string& v) const;
};

Label label_from_vector(const Graph& g, const Eigen::VectorXd& v);
Eigen::VectorXd label_to_vector(const Graph& g, const Label& label);

/// Restriction of a label to X (the inherited label).  Throws DomainError
/// when X is not a subset of the label's domain.
Label restrict_label(const Label& label, const VertexSet& x);

/// Perron data of a connected graph: the top eigenvalue and its eigenvector
/// with every coordinate strictly positive.  `gap` is lambda1 - lambda2
/// (lambda1 is simple for connected graphs).  Disconnected input is a
/// precondition error.
struct PerronData {
  double lambda1 = 0.0;
  Label v1;
  double gap = 0.0;
};

PerronData perron_data(const Graph& g, double tau = -1.0);

}  // namespace coxeter

#endif
