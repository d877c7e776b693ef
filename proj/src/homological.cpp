#include "qln/homological.hpp"

#include <algorithm>

namespace qln {

std::optional<Interval> syzygy(const Algebra& a, Interval m) {
    int e = a.projective_socle(m.top);
    if (m.socle >= e) return std::nullopt;  // M = P(top)
    return Interval{m.socle + 1, e};
}

std::optional<Interval> cosyzygy(const Algebra& a, Interval m) {
    int c = a.injective_top(m.socle);
    if (m.top <= c) return std::nullopt;  // M = I(socle)
    return Interval{c, m.top - 1};
}

Resolution projective_resolution(const Algebra& a, Interval m) {
    Resolution res;
    std::optional<Interval> cur = m;
    while (cur) {
        res.terms.push_back(projective(a, cur->top));
        cur = syzygy(a, *cur);
    }
    return res;
}

int ext_dim(const Algebra& a, Interval m, Interval n, int k) {
    if (k == 0) return hom_dim(m, n);
    Resolution res = projective_resolution(a, m);
    int len = static_cast<int>(res.terms.size());
    if (k >= len) return 0;
    auto h = [&](int j) { return j < len ? hom_dim(res.terms[static_cast<size_t>(j)], n) : 0; };
    // d_j : Hom(P_j, N) -> Hom(P_{j+1}, N) has rank 1 iff both spaces are
    // nonzero and the composite P_{j+1} -> P_j -> N survives, which happens
    // exactly when top(P_{j+1}) <= socle(N).
    auto rank_d = [&](int j) {
        if (j < 0 || j + 1 >= len) return 0;
        return (h(j) == 1 && h(j + 1) == 1 &&
                res.terms[static_cast<size_t>(j + 1)].top <= n.socle)
                   ? 1
                   : 0;
    };
    return h(k) - rank_d(k) - rank_d(k - 1);
}

bool ext_vanishes_positive(const Algebra& a, Interval m, Interval n) {
    Resolution res = projective_resolution(a, m);
    int len = static_cast<int>(res.terms.size());
    auto h = [&](int j) { return j < len ? hom_dim(res.terms[static_cast<size_t>(j)], n) : 0; };
    auto rank_d = [&](int j) {
        if (j < 0 || j + 1 >= len) return 0;
        return (h(j) == 1 && h(j + 1) == 1 &&
                res.terms[static_cast<size_t>(j + 1)].top <= n.socle)
                   ? 1
                   : 0;
    };
    for (int k = 1; k < len; ++k)
        if (h(k) - rank_d(k) - rank_d(k - 1) != 0) return false;
    return true;
}

HomDims homdims(const Algebra& a, Interval m) {
    int pdim = projective_resolution(a, m).pdim();
    int idim = 0;
    std::optional<Interval> cur = cosyzygy(a, m);
    while (cur) {
        ++idim;
        cur = cosyzygy(a, *cur);
    }
    return {pdim, idim};
}

bool is_rigid(const Algebra& a, const Module& t) {
    for (const Interval& m : t) {
        if (!a.valid(m)) return false;
        for (const Interval& n : t)
            if (!ext_vanishes_positive(a, m, n)) return false;
    }
    return true;
}

bool is_tilting(const Algebra& a, const Module& t) {
    if (static_cast<int>(t.size()) != a.vertices()) return false;
    Module c = canonicalize(t);
    if (c.size() != t.size()) return false;  // duplicates
    return is_rigid(a, c);
}

ExtTable::ExtTable(const Algebra& a) : a_(a), indecs_(indecomposables(a)) {
    size_t n = indecs_.size();
    ok_.assign(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            ok_[i * n + j] = ext_vanishes_positive(a_, indecs_[i], indecs_[j]) ? 1 : 0;
}

int ExtTable::index(Interval m) const {
    auto it = std::lower_bound(indecs_.begin(), indecs_.end(), m);
    if (it == indecs_.end() || *it != m) return -1;
    return static_cast<int>(it - indecs_.begin());
}

}  // namespace qln
