// Minimal projective resolutions, Ext dimensions, projective and injective
// dimension, rigidity and the tilting test.
//
// The minimal resolution of an interval has one indecomposable projective per
// degree, so Hom(P_k, N) is 0- or 1-dimensional and Ext is computed from the
// complex Hom(P_*, N) with differentials decided by the composite rule.

#pragma once

#include <optional>
#include <vector>

#include "qln/algebra.hpp"

namespace qln {

struct Resolution {
    std::vector<Interval> terms;  // P_0, P_1, ...; each a projective interval
    int pdim() const { return static_cast<int>(terms.size()) - 1; }
};

// Kernel of P(top M) ->> M, or nullopt if M is projective.
std::optional<Interval> syzygy(const Algebra& a, Interval m);
// Cokernel of M >-> I(socle M), or nullopt if M is injective.
std::optional<Interval> cosyzygy(const Algebra& a, Interval m);

Resolution projective_resolution(const Algebra& a, Interval m);

// dim Ext^k(M, N), always 0 or 1.
int ext_dim(const Algebra& a, Interval m, Interval n, int k);
// Ext^k(M, N) = 0 for all k >= 1 (k bounded by the resolution length of M).
bool ext_vanishes_positive(const Algebra& a, Interval m, Interval n);

struct HomDims {
    int pdim;
    int idim;
};
HomDims homdims(const Algebra& a, Interval m);

bool is_rigid(const Algebra& a, const Module& t);
bool is_tilting(const Algebra& a, const Module& t);

// Per-algebra cache of pairwise Ext-vanishing over the indecomposables; the
// workhorse behind enumeration and mutation scans.
class ExtTable {
public:
    explicit ExtTable(const Algebra& a);

    const Algebra& algebra() const { return a_; }
    const Module& indecs() const { return indecs_; }
    int count() const { return static_cast<int>(indecs_.size()); }
    int index(Interval m) const;  // -1 if not an indecomposable

    // Ext^{>0}(M_i, M_j) = 0
    bool ext_ok(int i, int j) const { return ok_[static_cast<size_t>(i) * indecs_.size() + j]; }
    // both directions
    bool rigid_pair(int i, int j) const { return ext_ok(i, j) && ext_ok(j, i); }

private:
    Algebra a_;
    Module indecs_;
    std::vector<char> ok_;
};

}  // namespace qln
