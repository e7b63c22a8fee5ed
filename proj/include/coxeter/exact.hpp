#ifndef COXETER_EXACT_HPP
#define COXETER_EXACT_HPP

#include <vector>

#include "coxeter/graph.hpp"
#include "coxeter/spectral.hpp"

namespace coxeter {

/// True when the graph's form matrix is integer valued (all bonds in
/// {2, 3, inf}), so the exact signature path applies.
bool exact_inertia_available(const Graph& g);

/// Signature of a symmetric integer matrix, computed exactly over the
/// rationals by symmetric elimination with diagonal pivoting (a zero
/// diagonal falls back to an off-diagonal 2x2 pivot, which contributes one
/// positive and one negative eigenvalue).  Inertia is additive over the
/// pivots by Sylvester's law, so no tolerance is involved.
/// `m` is row-major n x n and must be symmetric.
Signature exact_inertia_int(const std::vector<long long>& m, int n);

/// Exact signature of the graph's form matrix.  Throws DomainError when the
/// exact path is unavailable.
Signature exact_inertia(const Graph& g);

}  // namespace coxeter

#endif
