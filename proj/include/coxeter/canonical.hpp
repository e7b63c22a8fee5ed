#ifndef COXETER_CANONICAL_HPP
#define COXETER_CANONICAL_HPP

#include <string>

#include "coxeter/graph.hpp"

namespace coxeter {

/// Canonical encoding of a labeled graph up to isomorphism: two graphs give
/// equal strings iff they are isomorphic (vertex names erased, bond labels
/// preserved).  The string reconstructs the graph: "n<k>" followed by
/// ";u-v:m" entries over canonical vertex indices, e.g. "n3;0-1:3;0-2:inf".
///
/// Algorithm selection is by isomorphism invariants, so the paths never
/// collide: forests use a rooted-tree encoding, other graphs up to 8
/// vertices use exhaustive permutation minimization, and larger ones use
/// partition refinement with backtracking.  Only correctness is promised;
/// highly symmetric dense graphs above 8 vertices can be slow.
std::string canonical_form(const Graph& g);

/// Graph with vertices "0".."n-1" reconstructed from a canonical form
/// string (inverse of canonical_form up to isomorphism).
Graph graph_from_canonical_form(const std::string& form);

namespace detail {
bool is_forest(const Graph& g);
std::string canonical_form_forest(const Graph& g);
std::string canonical_form_minimized(const Graph& g);
std::string canonical_form_refined(const Graph& g);
}  // namespace detail

}  // namespace coxeter

#endif
