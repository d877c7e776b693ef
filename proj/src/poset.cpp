#include "qln/poset.hpp"

#include <algorithm>
#include <string>

#include "qln/algebra.hpp"

namespace qln {

PartialOrder::PartialOrder(int lo, int hi) : lo_(lo), hi_(hi) {
    if (hi < lo) throw NotAPartialOrder("empty ground set [" + std::to_string(lo) + "," +
                                        std::to_string(hi) + "]");
    le_.assign(static_cast<size_t>(size()) * static_cast<size_t>(size()), false);
    for (int x = lo_; x <= hi_; ++x) le_[idx(x, x)] = true;
}

PartialOrder PartialOrder::chain(const std::vector<int>& bottom_to_top) {
    auto [mn, mx] = std::minmax_element(bottom_to_top.begin(), bottom_to_top.end());
    PartialOrder p(*mn, *mx);
    for (size_t i = 0; i < bottom_to_top.size(); ++i)
        for (size_t j = i; j < bottom_to_top.size(); ++j) p.add(bottom_to_top[i], bottom_to_top[j]);
    p.close();
    if (static_cast<int>(bottom_to_top.size()) != p.size())
        throw NotAPartialOrder("chain labels are not a contiguous window");
    return p;
}

PartialOrder PartialOrder::from_covers(int lo, int hi,
                                       const std::vector<std::pair<int, int>>& covers) {
    PartialOrder p(lo, hi);
    for (auto [g, l] : covers) {
        if (g < lo || g > hi || l < lo || l > hi)
            throw NotAPartialOrder("cover (" + std::to_string(g) + "," + std::to_string(l) +
                                   ") outside ground set");
        p.add(l, g);
    }
    p.close();
    return p;
}

void PartialOrder::close() {
    int n = size();
    // Floyd-Warshall style closure on the boolean relation.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!le_[static_cast<size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (le_[static_cast<size_t>(k) * n + j]) le_[static_cast<size_t>(i) * n + j] = true;
        }
    for (int x = lo_; x <= hi_; ++x)
        for (int y = x + 1; y <= hi_; ++y)
            if (leq(x, y) && leq(y, x))
                throw NotAPartialOrder("antisymmetry fails on {" + std::to_string(x) + "," +
                                       std::to_string(y) + "}");
}

bool PartialOrder::is_total() const {
    for (int x = lo_; x <= hi_; ++x)
        for (int y = x + 1; y <= hi_; ++y)
            if (!comparable(x, y)) return false;
    return true;
}

std::vector<int> PartialOrder::minimal_elements() const {
    std::vector<int> out;
    for (int x = lo_; x <= hi_; ++x) {
        bool min = true;
        for (int y = lo_; y <= hi_ && min; ++y)
            if (lt(y, x)) min = false;
        if (min) out.push_back(x);
    }
    return out;
}

std::vector<int> PartialOrder::maximal_elements() const {
    std::vector<int> out;
    for (int x = lo_; x <= hi_; ++x) {
        bool max = true;
        for (int y = lo_; y <= hi_ && max; ++y)
            if (lt(x, y)) max = false;
        if (max) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<int, int>> PartialOrder::covers() const {
    std::vector<std::pair<int, int>> out;
    for (int g = lo_; g <= hi_; ++g)
        for (int l = lo_; l <= hi_; ++l) {
            if (!lt(l, g)) continue;
            bool cover = true;
            for (int z = lo_; z <= hi_ && cover; ++z)
                if (z != l && z != g && lt(l, z) && lt(z, g)) cover = false;
            if (cover) out.emplace_back(g, l);
        }
    std::sort(out.begin(), out.end());
    return out;
}

PartialOrder PartialOrder::restricted(int s, int t) const {
    PartialOrder p(s, t);
    for (int x = s; x <= t; ++x)
        for (int y = s; y <= t; ++y)
            if (leq(x, y)) p.add(x, y);
    return p;
}

PartialOrder PartialOrder::shifted(int offset) const {
    PartialOrder p(lo_ + offset, hi_ + offset);
    p.le_ = le_;
    return p;
}

bool PartialOrder::subrelation_of(const PartialOrder& o) const {
    if (lo_ != o.lo_ || hi_ != o.hi_) return false;
    for (int x = lo_; x <= hi_; ++x)
        for (int y = lo_; y <= hi_; ++y)
            if (leq(x, y) && !o.leq(x, y)) return false;
    return true;
}

bool operator<(const PartialOrder& a, const PartialOrder& b) {
    if (a.lo_ != b.lo_) return a.lo_ < b.lo_;
    if (a.hi_ != b.hi_) return a.hi_ < b.hi_;
    return a.le_ < b.le_;
}

}  // namespace qln
