#include "coxeter/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "coxeter/errors.hpp"
#include "coxeter/exact.hpp"

namespace coxeter {

double default_tolerance(int n) { return 1e-8 * static_cast<double>(n); }

namespace {

double resolve_tau(const Graph& g, double tau) {
  return tau > 0.0 ? tau : default_tolerance(g.size());
}

void require_nonempty(const Graph& g, const char* op) {
  if (g.empty()) throw DomainError(std::string(op) + ": graph is empty");
}

// Sign convention: first coordinate with |x| > 1e-12 * max|x| made positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  double scale = v.cwiseAbs().maxCoeff();
  if (scale <= 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-12 * scale) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

FormMatrix form_matrix(const Graph& g) {
  require_nonempty(g, "form_matrix");
  int n = g.size();
  FormMatrix c = FormMatrix::Zero(n, n);
  c.diagonal().setConstant(2.0);
  for (const auto& [key, label] : g.edges()) {
    double entry = -label.adjacency_entry();
    c(key.first, key.second) = entry;
    c(key.second, key.first) = entry;
  }
  return c;
}

AdjacencyMatrix generalized_adjacency(const Graph& g) {
  require_nonempty(g, "generalized_adjacency");
  int n = g.size();
  AdjacencyMatrix a = AdjacencyMatrix::Zero(n, n);
  for (const auto& [key, label] : g.edges()) {
    double entry = label.adjacency_entry();
    a(key.first, key.second) = entry;
    a(key.second, key.first) = entry;
  }
  return a;
}

Spectrum spectrum(const AdjacencyMatrix& a, double tau) {
  if (a.rows() != a.cols() || a.rows() == 0) throw DomainError("spectrum: matrix must be square and nonempty");
  if (!a.isApprox(a.transpose(), 0.0)) throw DomainError("spectrum: matrix is not symmetric");
  if (tau <= 0.0) throw DomainError("spectrum: tolerance must be positive");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("eigensolver failed to converge");
  }

  int n = static_cast<int>(a.rows());
  Spectrum s;
  s.tau = tau;
  s.values.resize(n);
  s.vectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (int i = 0; i < n; ++i) {
    s.values[i] = solver.eigenvalues()[n - 1 - i];
    s.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    fix_sign(s.vectors.col(i));
  }

  double max_abs = a.cwiseAbs().maxCoeff();
  double bound = 1e-8 * static_cast<double>(n) * max_abs;
  s.residual = (a * s.vectors - s.vectors * s.values.asDiagonal()).cwiseAbs().maxCoeff();
  if (s.residual > bound && max_abs > 0.0) {
    throw ComputationError("eigenvector reconstruction residual " +
                           std::to_string(s.residual) + " exceeds bound " +
                           std::to_string(bound));
  }
  return s;
}

Eigen::VectorXd spectrum_values(const AdjacencyMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ComputationError("eigensolver failed to converge");
  }
  return solver.eigenvalues().reverse();
}

namespace {

bool integer_entries(const FormMatrix& c) {
  for (Eigen::Index i = 0; i < c.rows(); ++i) {
    for (Eigen::Index j = 0; j < c.cols(); ++j) {
      if (c(i, j) != std::round(c(i, j))) return false;
    }
  }
  return true;
}

Signature signature_from_values(const Eigen::VectorXd& lambda, double tau) {
  // Eigenvalues of C are 2 - lambda(A): positive <=> lambda < 2.
  Signature sig;
  sig.exact = false;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda[i] - 2.0) <= tau) {
      ++sig.r;
    } else if (lambda[i] > 2.0) {
      ++sig.q;
    } else {
      ++sig.p;
    }
  }
  return sig;
}

}  // namespace

Signature inertia(const FormMatrix& c, double tau) {
  if (c.rows() != c.cols() || c.rows() == 0) throw DomainError("inertia: matrix must be square and nonempty");
  if (!c.isApprox(c.transpose(), 0.0)) throw DomainError("inertia: matrix is not symmetric");
  int n = static_cast<int>(c.rows());
  if (tau <= 0.0) tau = default_tolerance(n);

  if (integer_entries(c)) {
    std::vector<long long> m(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m[static_cast<size_t>(i) * n + j] = static_cast<long long>(std::llround(c(i, j)));
      }
    }
    return exact_inertia_int(m, n);
  }
  return signature_from_values(spectrum_values(2.0 * Eigen::MatrixXd::Identity(n, n) - c), tau);
}

std::string to_string(CoxeterClass c) {
  switch (c) {
    case CoxeterClass::Spherical: return "Spherical";
    case CoxeterClass::Affine: return "Affine";
    case CoxeterClass::StronglyHyperbolic: return "StronglyHyperbolic";
    case CoxeterClass::WeaklyHyperbolic: return "WeaklyHyperbolic";
    case CoxeterClass::HigherRank: return "HigherRank";
  }
  return "?";
}

CoxeterClass class_from_signature(const Signature& s) {
  if (s.q == 0) return s.r == 0 ? CoxeterClass::Spherical : CoxeterClass::Affine;
  if (s.q == 1) return s.r == 0 ? CoxeterClass::StronglyHyperbolic : CoxeterClass::WeaklyHyperbolic;
  return CoxeterClass::HigherRank;
}

Classification classify(const Graph& g, double tau) {
  require_nonempty(g, "classify");
  tau = resolve_tau(g, tau);

  Classification out;
  out.n = g.size();
  out.tau = tau;

  Eigen::VectorXd lambda = spectrum_values(generalized_adjacency(g));
  out.lambda1 = lambda[0];
  out.lambda2 = out.n >= 2 ? lambda[1] : 0.0;

  if (exact_inertia_available(g)) {
    out.sig = exact_inertia(g);
    out.exact = true;
    out.approximate = false;
  } else {
    out.sig = signature_from_values(lambda, tau);
    out.exact = false;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
      if (std::abs(lambda[i] - 2.0) <= tau) out.approximate = true;
    }
  }
  out.cls = class_from_signature(out.sig);
  return out;
}

double Label::value_of(const std::string& v) const {
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] == v) return values[i];
  }
  throw DomainError("label has no value for vertex '" + v + "'");
}

Label label_from_vector(const Graph& g, const Eigen::VectorXd& v) {
  if (v.size() != g.size()) throw DomainError("label length does not match graph size");
  Label out;
  out.vertices = g.vertices();
  out.values.assign(v.data(), v.data() + v.size());
  return out;
}

Eigen::VectorXd label_to_vector(const Graph& g, const Label& label) {
  Eigen::VectorXd v(g.size());
  for (int i = 0; i < g.size(); ++i) v[i] = label.value_of(g.vertex(i));
  return v;
}

Label restrict_label(const Label& label, const VertexSet& x) {
  Label out;
  for (const std::string& name : x) {
    bool found = false;
    for (size_t i = 0; i < label.vertices.size(); ++i) {
      if (label.vertices[i] == name) {
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("restrict_label: vertex '" + name + "' not in label domain");
  }
  for (size_t i = 0; i < label.vertices.size(); ++i) {
    for (const std::string& name : x) {
      if (label.vertices[i] == name) {
        out.vertices.push_back(label.vertices[i]);
        out.values.push_back(label.values[i]);
        break;
      }
    }
  }
  return out;
}

PerronData perron_data(const Graph& g, double tau) {
  require_nonempty(g, "perron_data");
  if (!is_connected(g)) {
    throw PreconditionError("perron_data: graph must be connected");
  }
  tau = resolve_tau(g, tau);
  Spectrum s = spectrum(generalized_adjacency(g), tau);

  Eigen::VectorXd v1 = s.vectors.col(0);
  if (v1.sum() < 0.0) v1 = -v1;
  if (v1.minCoeff() <= 0.0) {
    throw ComputationError("top eigenvector of a connected graph has a nonpositive coordinate");
  }

  PerronData out;
  out.lambda1 = s.values[0];
  out.v1 = label_from_vector(g, v1);
  out.gap = g.size() >= 2 ? s.values[0] - s.values[1] : std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace coxeter
