#include "coxeter/exact.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "coxeter/errors.hpp"

namespace coxeter {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& x) { return x.sign(); }

}  // namespace

bool exact_inertia_available(const Graph& g) { return g.integer_adjacency(); }

Signature exact_inertia_int(const std::vector<long long>& m, int n) {
  if (static_cast<int>(m.size()) != n * n) throw DomainError("matrix size mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (m[static_cast<size_t>(i) * n + j] != m[static_cast<size_t>(j) * n + i]) {
        throw DomainError("matrix is not symmetric");
      }
    }
  }

  std::vector<Rational> a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i] = m[i];
  auto at = [&](int i, int j) -> Rational& { return a[static_cast<size_t>(i) * n + j]; };
  auto swap_rows_cols = [&](int i, int j) {
    if (i == j) return;
    for (int k = 0; k < n; ++k) std::swap(at(i, k), at(j, k));
    for (int k = 0; k < n; ++k) std::swap(at(k, i), at(k, j));
  };

  Signature sig;
  sig.exact = true;
  int k = 0;
  while (k < n) {
    // 1x1 pivot on a nonzero diagonal entry.
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (sign_of(at(i, i)) != 0) {
        piv = i;
        break;
      }
    }
    if (piv >= 0) {
      swap_rows_cols(k, piv);
      const Rational d = at(k, k);
      if (sign_of(d) > 0) {
        ++sig.p;
      } else {
        ++sig.q;
      }
      for (int i = k + 1; i < n; ++i) {
        if (sign_of(at(i, k)) == 0) continue;
        const Rational f = at(i, k) / d;
        for (int j = k + 1; j < n; ++j) at(i, j) -= f * at(k, j);
      }
      for (int i = k + 1; i < n; ++i) {
        at(i, k) = 0;
        at(k, i) = 0;
      }
      ++k;
      continue;
    }
    // Diagonal is all zero; look for an off-diagonal entry.
    int pi = -1, pj = -1;
    for (int i = k; i < n && pi < 0; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (sign_of(at(i, j)) != 0) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
    if (pi < 0) {
      // Trailing block is identically zero.
      sig.r += n - k;
      break;
    }
    swap_rows_cols(k, pi);
    swap_rows_cols(k + 1, pj);  // pj > pi >= k, so the first swap left it in place
    // 2x2 pivot [[0, b], [b, 0]] contributes one positive and one negative
    // eigenvalue; its inverse is [[0, 1/b], [1/b, 0]].
    const Rational b = at(k, k + 1);
    ++sig.p;
    ++sig.q;
    for (int i = k + 2; i < n; ++i) {
      const Rational ui = at(i, k);
      const Rational vi = at(i, k + 1);
      if (sign_of(ui) == 0 && sign_of(vi) == 0) continue;
      for (int j = k + 2; j < n; ++j) {
        const Rational uj = at(j, k);
        const Rational vj = at(j, k + 1);
        at(i, j) -= (ui * vj + vi * uj) / b;
      }
    }
    for (int i = k + 2; i < n; ++i) {
      at(i, k) = 0;
      at(k, i) = 0;
      at(i, k + 1) = 0;
      at(k + 1, i) = 0;
    }
    k += 2;
  }
  return sig;
}

Signature exact_inertia(const Graph& g) {
  if (!exact_inertia_available(g)) {
    throw DomainError("exact signature requires every bond label in {2, 3, inf}");
  }
  int n = g.size();
  std::vector<long long> c(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) c[static_cast<size_t>(i) * n + i] = 2;
  for (const auto& [key, label] : g.edges()) {
    long long entry = label.infinite() ? -2 : -1;
    c[static_cast<size_t>(key.first) * n + key.second] = entry;
    c[static_cast<size_t>(key.second) * n + key.first] = entry;
  }
  return exact_inertia_int(c, n);
}

}  // namespace coxeter
