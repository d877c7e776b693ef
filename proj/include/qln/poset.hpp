// Partial orders on a contiguous vertex window [lo, hi], with transitive
// closure, Hasse covers (transitive reduction), restriction and relabeling.
// Cover pairs are stored as (greater, lesser), matching Hasse arrows that
// point from greater to lesser.

#pragma once

#include <utility>
#include <vector>

namespace qln {

class PartialOrder {
public:
    PartialOrder() = default;
    // The antichain on [lo, hi] (reflexive pairs only).
    PartialOrder(int lo, int hi);

    // Chain bottom_to_top[0] < bottom_to_top[1] < ...; labels must form a
    // contiguous window.
    static PartialOrder chain(const std::vector<int>& bottom_to_top);
    // Builds from (greater, lesser) cover pairs; throws NotAPartialOrder if
    // the closure is not antisymmetric.
    static PartialOrder from_covers(int lo, int hi, const std::vector<std::pair<int, int>>& covers);

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int size() const { return hi_ - lo_ + 1; }

    bool leq(int x, int y) const { return le_[idx(x, y)]; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    // Adds x <= y without closing; call close() afterwards.
    void add(int x, int y) { le_[idx(x, y)] = true; }
    // Transitive closure; throws NotAPartialOrder on an antisymmetry violation.
    void close();

    bool is_total() const;
    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;

    // (greater, lesser) pairs sorted ascending.
    std::vector<std::pair<int, int>> covers() const;

    PartialOrder restricted(int s, int t) const;
    PartialOrder shifted(int offset) const;

    // True if every relation of this order also holds in coarser... the other
    // direction: *this is a subrelation of o.
    bool subrelation_of(const PartialOrder& o) const;

    friend bool operator==(const PartialOrder&, const PartialOrder&) = default;
    // Lexicographic on (lo, hi, relation matrix); canonical sort key.
    friend bool operator<(const PartialOrder& a, const PartialOrder& b);

private:
    size_t idx(int x, int y) const {
        return static_cast<size_t>(x - lo_) * static_cast<size_t>(size()) +
               static_cast<size_t>(y - lo_);
    }
    int lo_ = 1;
    int hi_ = 0;
    std::vector<bool> le_;
};

}  // namespace qln
