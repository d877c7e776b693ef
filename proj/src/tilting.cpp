#include "qln/tilting.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qln {

LeftApproximation min_left_approx(const Algebra& a, Interval x, const Module& u) {
    Module candidates;
    for (const Interval& v : u)
        if (hom_dim(x, v) == 1) candidates.push_back(v);
    // Keep maximal elements under componentwise (top, socle): the canonical
    // map to a dominated candidate factors through the dominating one.
    Module targets;
    for (const Interval& v : candidates) {
        bool dominated = false;
        for (const Interval& w : candidates)
            if (w != v && v.top <= w.top && v.socle <= w.socle) {
                dominated = true;
                break;
            }
        if (!dominated) targets.push_back(v);
    }
    targets = canonicalize(targets);
    bool injective = false;
    for (const Interval& v : targets)
        if (v.socle == x.socle) injective = true;
    return {targets, injective};
}

namespace {

// Rank of the path map C_p -> C_q of the cokernel C = coker(X -> sum V_j).
// The ambient rank counts targets alive on all of [p,q]; one is lost when the
// image of X at layer q is nonzero and lies inside the surviving span.
int coker_path_rank(Interval x, const Module& targets, int p, int q) {
    if (p < 1 || targets.empty()) return 0;
    int ambient = 0;
    for (const Interval& v : targets)
        if (v.top <= p && q <= v.socle) ++ambient;
    int maxd = 0;
    for (const Interval& v : targets) maxd = std::max(maxd, v.socle);
    bool f_nonzero = (x.top <= q && q <= maxd);
    if (f_nonzero) {
        bool inside = true;
        for (const Interval& v : targets)
            if (q <= v.socle && v.top > p) inside = false;
        if (inside) return ambient - 1;
    }
    return ambient;
}

}  // namespace

Module cokernel_decomposition(const Algebra& a, Interval x, const Module& targets) {
    int n = a.vertices();
    auto r = [&](int p, int q) {
        if (p < 1 || q > n || p > q) return 0;
        return coker_path_rank(x, targets, p, q);
    };
    Module out;
    long long total_len = 0;
    for (int top = 1; top <= n; ++top)
        for (int socle = top; socle <= n; ++socle) {
            int mult = r(top, socle) - r(top - 1, socle) - r(top, socle + 1) + r(top - 1, socle + 1);
            if (mult < 0)
                throw InternalCheckFailed("negative multiplicity in cokernel decomposition");
            for (int c = 0; c < mult; ++c) {
                out.push_back({top, socle});
                total_len += socle - top + 1;
            }
        }
    long long expect = 0;
    int maxd = 0;
    for (const Interval& v : targets) {
        expect += v.length();
        maxd = std::max(maxd, v.socle);
    }
    if (!targets.empty()) expect -= std::min(maxd, x.socle) - x.top + 1;  // rank of the map
    if (total_len != expect)
        throw InternalCheckFailed("cokernel decomposition does not match dimension count");
    return out;
}

std::optional<Module> left_mutation(const ExtTable& table, const Module& t, Interval x) {
    const Algebra& a = table.algebra();
    Module rest = module_erase(t, x);
    LeftApproximation approx = min_left_approx(a, x, rest);

    // Complement scan: all intervals completing rest to a tilting module
    // strictly below T.  The completions form a chain, and the mutation is
    // the cover, i.e. the maximal candidate.
    int xi = table.index(x);
    std::vector<int> rest_idx;
    rest_idx.reserve(rest.size());
    for (const Interval& m : rest) rest_idx.push_back(table.index(m));
    std::vector<int> candidates;
    for (int yi = 0; yi < table.count(); ++yi) {
        if (yi == xi) continue;
        if (module_contains(rest, table.indecs()[static_cast<size_t>(yi)])) continue;
        if (!table.ext_ok(xi, yi)) continue;  // need T >= mutated module
        bool ok = true;
        for (int ri : rest_idx)
            if (!table.rigid_pair(ri, yi)) {
                ok = false;
                break;
            }
        if (ok) candidates.push_back(yi);
    }

    if (candidates.empty() != !approx.injective)
        throw InternalCheckFailed("complement scan disagrees with approximation injectivity at " +
                                  to_string(x));
    if (candidates.empty()) return std::nullopt;

    std::optional<Interval> found;
    for (int yi : candidates) {
        bool maximal = true;
        for (int zi : candidates)
            if (zi != yi && !table.ext_ok(yi, zi)) maximal = false;
        if (!maximal) continue;
        if (found) throw InternalCheckFailed("two maximal complements below " + to_string(x));
        found = table.indecs()[static_cast<size_t>(yi)];
    }
    if (!found) throw InternalCheckFailed("no maximal complement below " + to_string(x));

    // Cross-check against the cokernel of the minimal approximation.
    Module coker = cokernel_decomposition(a, x, approx.targets);
    if (coker.size() != 1 || coker.front() != *found)
        throw InternalCheckFailed("approximation cokernel disagrees with complement scan at " +
                                  to_string(x));
    return module_insert(rest, *found);
}

std::optional<Module> left_mutation(const Algebra& a, const Module& t, Interval x) {
    if (!module_contains(t, x)) throw VertexOutOfRange(to_string(x) + " is not a summand");
    ExtTable table(a);
    return left_mutation(table, t, x);
}

namespace {

Module regular_module(const Algebra& a) {
    Module t;
    for (int i = 1; i <= a.vertices(); ++i) t.push_back(projective(a, i));
    return canonicalize(t);
}

std::vector<Module> enumerate_exhaustive(const ExtTable& table) {
    int n = table.algebra().vertices();
    int total = table.count();
    std::vector<Module> out;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(chosen.size()) == n) {
            Module t;
            for (int i : chosen) t.push_back(table.indecs()[static_cast<size_t>(i)]);
            out.push_back(t);
            return;
        }
        int need = n - static_cast<int>(chosen.size());
        for (int i = start; i + need <= total; ++i) {
            bool ok = true;
            for (int j : chosen)
                if (!table.rigid_pair(i, j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

std::vector<Module> enumerate_mutation(const ExtTable& table) {
    std::set<Module> seen;
    std::vector<Module> queue{regular_module(table.algebra())};
    seen.insert(queue.front());
    for (size_t head = 0; head < queue.size(); ++head) {
        Module t = queue[head];
        for (const Interval& x : t) {
            auto next = left_mutation(table, t, x);
            if (next && seen.insert(*next).second) queue.push_back(*next);
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::vector<Module> enumerate_tilting(const Algebra& a, EnumStrategy strategy, int size_limit) {
    if (strategy == EnumStrategy::exhaustive && a.vertices() > size_limit)
        throw SizeLimitExceeded("exhaustive enumeration limited to n <= " +
                                std::to_string(size_limit));
    ExtTable table(a);
    std::vector<Module> out = strategy == EnumStrategy::exhaustive ? enumerate_exhaustive(table)
                                                                   : enumerate_mutation(table);
    std::sort(out.begin(), out.end());
    return out;
}

bool tilt_geq(const Algebra& a, const Module& t, const Module& u) {
    for (const Interval& m : t)
        for (const Interval& n : u)
            if (!ext_vanishes_positive(a, m, n)) return false;
    return true;
}

TiltPoset tilt_hasse(const Algebra& a) {
    ExtTable table(a);
    TiltPoset poset;
    poset.elements = enumerate_tilting(a, EnumStrategy::mutation);
    std::map<Module, int> index;
    for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i)
        index[poset.elements[static_cast<size_t>(i)]] = i;
    for (int i = 0; i < static_cast<int>(poset.elements.size()); ++i) {
        const Module& t = poset.elements[static_cast<size_t>(i)];
        for (const Interval& x : t) {
            auto next = left_mutation(table, t, x);
            if (next) poset.edges.push_back({i, index.at(*next), x});
        }
    }
    std::sort(poset.edges.begin(), poset.edges.end(), [](const auto& e, const auto& f) {
        return std::tie(e.source, e.mutated) < std::tie(f.source, f.mutated);
    });
    poset.maximum = index.at(regular_module(a));
    return poset;
}

}  // namespace qln
