// Catalan numbers, the tilting-count recursion on suffix parses, the
// decomposition of the tilting set by the costandard module at the sink, and
// the nodal counting recursion for quasi-hereditary structures.

#pragma once

#include "qln/algebra.hpp"

namespace qln {

// Exact n-th Catalan number; guards 64-bit overflow (m <= 35).
long long catalan(int m);

// Tilting count by the suffix recursion with memoization: a relation-free
// algebra counts the Catalan number; otherwise the count reduces to the
// algebra left of the last run of relations.
long long count_tilt_recursive(const Algebra& a);

// Index i in [l, n] (l the last relation vertex, or 1) of the cell of the
// tilting-set decomposition containing T; cross-checked against the
// costandard module of the sink under the extracted order.
int classify_decomposition(const Algebra& a, const Module& t);

// The algebra built from b by appending k+1 relation vertices and then m free
// arrows (gluing a radical-square-zero chain of k+1 vertices and a path of
// m+1 vertices at the sink).
Algebra nodal_glued_algebra(const Algebra& b, int k, int m);

// Count of quasi-hereditary structures of nodal_glued_algebra(b, k, m) via
// the gluing recursion: |qhs B| C_m + N (C_{m+1} + (k-1) C_m), with N the
// number of structures of b whose sink lies strictly below its predecessor
// (counted by enumeration).  When idim of the sink simple is at most 1, N is
// cross-checked against |qhs| of b with the sink removed.
long long count_qhs_nodal(const Algebra& b, int k, int m);

}  // namespace qln
