#include "qln/algebra.hpp"

#include <algorithm>

namespace qln {

Algebra make_algebra(int n, std::vector<int> relv) {
    if (n < 1) throw NonPositiveSize("vertex count must be at least 1, got " + std::to_string(n));
    std::sort(relv.begin(), relv.end());
    relv.erase(std::unique(relv.begin(), relv.end()), relv.end());
    for (int l : relv) {
        if (l < 2 || l > n - 1)
            throw RelationOutOfRange("relation vertex " + std::to_string(l) + " outside [2," +
                                     std::to_string(n - 1) + "]");
    }
    Algebra a;
    a.n_ = n;
    a.relv_ = std::move(relv);
    a.rel_mask_.assign(static_cast<size_t>(n) + 1, 0);
    for (int l : a.relv_) a.rel_mask_[static_cast<size_t>(l)] = 1;
    return a;
}

bool Algebra::valid(Interval m) const {
    if (m.top < 1 || m.socle > n_ || m.top > m.socle) return false;
    for (int l = m.top + 1; l < m.socle; ++l)
        if (rel_mask_[static_cast<size_t>(l)]) return false;
    return true;
}

int Algebra::projective_socle(int i) const {
    for (int l = i + 1; l <= n_ - 1; ++l)
        if (rel_mask_[static_cast<size_t>(l)]) return l;
    return n_;
}

int Algebra::injective_top(int i) const {
    for (int l = i - 1; l >= 2; --l)
        if (rel_mask_[static_cast<size_t>(l)]) return l;
    return 1;
}

Interval projective(const Algebra& a, int i) {
    if (i < 1 || i > a.vertices())
        throw VertexOutOfRange("vertex " + std::to_string(i) + " outside [1," +
                               std::to_string(a.vertices()) + "]");
    return {i, a.projective_socle(i)};
}

Interval injective(const Algebra& a, int i) {
    if (i < 1 || i > a.vertices())
        throw VertexOutOfRange("vertex " + std::to_string(i) + " outside [1," +
                               std::to_string(a.vertices()) + "]");
    return {a.injective_top(i), i};
}

Interval simple(int i) { return {i, i}; }

Interval structural_module(const Algebra& a, StructuralKind kind, int i) {
    switch (kind) {
        case StructuralKind::projective: return projective(a, i);
        case StructuralKind::injective: return injective(a, i);
        case StructuralKind::simple:
            if (i < 1 || i > a.vertices())
                throw VertexOutOfRange("vertex " + std::to_string(i) + " outside [1," +
                                       std::to_string(a.vertices()) + "]");
            return simple(i);
    }
    throw VertexOutOfRange("unreachable");
}

Module indecomposables(const Algebra& a) {
    Module out;
    for (int top = 1; top <= a.vertices(); ++top) {
        int max_socle = a.projective_socle(top);
        for (int socle = top; socle <= max_socle; ++socle) out.push_back({top, socle});
    }
    return out;
}

int hom_dim(Interval m, Interval n) {
    return (n.top <= m.top && m.top <= n.socle && n.socle <= m.socle) ? 1 : 0;
}

bool composite_nonzero(Interval m1, Interval m2, Interval m3) {
    return hom_dim(m1, m2) == 1 && hom_dim(m2, m3) == 1 && m1.top <= m3.socle;
}

std::optional<Interval> restrict_to_range(Interval m, int s, int t) {
    int top = std::max(m.top, s);
    int socle = std::min(m.socle, t);
    if (top > socle) return std::nullopt;
    return Interval{top, socle};
}

Module canonicalize(Module m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m;
}

bool module_contains(const Module& m, Interval x) {
    return std::binary_search(m.begin(), m.end(), x);
}

Module module_erase(Module m, Interval x) {
    auto it = std::lower_bound(m.begin(), m.end(), x);
    if (it != m.end() && *it == x) m.erase(it);
    return m;
}

Module module_insert(Module m, Interval x) {
    auto it = std::lower_bound(m.begin(), m.end(), x);
    if (it == m.end() || *it != x) m.insert(it, x);
    return m;
}

std::string to_string(Interval m) {
    return "[" + std::to_string(m.top) + "," + std::to_string(m.socle) + "]";
}

}  // namespace qln
