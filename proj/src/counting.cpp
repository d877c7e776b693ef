#include "qln/counting.hpp"

#include <algorithm>
#include <map>

#include "qln/homological.hpp"
#include "qln/qhs.hpp"
#include "qln/tilting.hpp"

namespace qln {

long long catalan(int m) {
    if (m < 0) throw VertexOutOfRange("catalan index must be nonnegative");
    if (m > 35) throw SizeLimitExceeded("catalan(" + std::to_string(m) + ") exceeds 64 bits");
    static const std::vector<long long> table = [] {
        std::vector<long long> c{1};
        for (int i = 1; i <= 35; ++i) {
            long long v = 0;
            for (int p = 1; p <= i; ++p) v += c[static_cast<size_t>(i - p)] * c[static_cast<size_t>(p - 1)];
            c.push_back(v);
        }
        return c;
    }();
    return table[static_cast<size_t>(m)];
}

namespace {

using AlgebraKey = std::pair<int, std::vector<int>>;

AlgebraKey key_of(const Algebra& a) { return {a.vertices(), a.relations()}; }

long long count_rec(const Algebra& a, std::map<AlgebraKey, long long>& memo) {
    if (a.relations().empty()) return catalan(a.vertices());
    AlgebraKey key = key_of(a);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    // Suffix parse: last relation l, m free arrows after it, and the maximal
    // run of consecutive relations ending at l (k+1 of them).
    int n = a.vertices();
    int l = a.relations().back();
    int m = n - l;
    int run_start = l;
    while (a.is_relation(run_start - 1)) --run_start;
    int k = l - run_start;
    int j = run_start - 1;  // base algebra size; run maximality keeps j off relv
    std::vector<int> base_rel;
    for (int r : a.relations())
        if (r < run_start) base_rel.push_back(r);

    long long base = count_rec(make_algebra(j, base_rel), memo);
    long long one_more = count_rec(make_algebra(j + 1, base_rel), memo);
    long long value = catalan(m) * one_more + (catalan(m + 1) + (k - 1) * catalan(m)) * base;
    memo.emplace(key, value);
    return value;
}

}  // namespace

long long count_tilt_recursive(const Algebra& a) {
    std::map<AlgebraKey, long long> memo;
    return count_rec(a, memo);
}

int classify_decomposition(const Algebra& a, const Module& t) {
    int n = a.vertices();
    if (n < 2) throw ClassificationFailed("decomposition requires at least two vertices");
    if (!is_tilting(a, t)) throw NotTilting("input is not a basic tilting module");
    int l = a.relations().empty() ? 1 : a.relations().back();

    int index = 0;
    if (module_contains(t, simple(n))) {
        index = n;
    } else if (a.is_relation(n - 1)) {
        index = n - 1;
    } else {
        for (int i = l; i <= n - 1; ++i) {
            if (module_contains(t, Interval{i, n}) && module_contains(t, Interval{i, n - 1})) {
                if (index) throw ClassificationFailed("two cells claim the same tilting module");
                index = i;
            }
        }
        if (!index) throw ClassificationFailed("no cell contains the tilting module");
    }

    // Cross-check: the cell index is where the costandard module of the sink
    // equals P(index) under the extracted order.
    PartialOrder order = order_from_tilting(a, t).order;
    Interval nabla_n = standard_costandard(a, order).nabla[static_cast<size_t>(n - 1)];
    if (!(nabla_n == projective(a, index)))
        throw ClassificationFailed("cell index disagrees with the sink costandard module");
    return index;
}

Algebra nodal_glued_algebra(const Algebra& b, int k, int m) {
    if (k < 0 || m < 1)
        throw VertexOutOfRange("need k >= 0 and m >= 1, got k=" + std::to_string(k) +
                               " m=" + std::to_string(m));
    int j = b.vertices();
    std::vector<int> rel = b.relations();
    // Gluing adds relations at every vertex of the inserted chain [j, j+k];
    // vertex 1 has no incoming arrow, so no relation arises there.
    for (int r = std::max(j, 2); r <= j + k; ++r) rel.push_back(r);
    return make_algebra(j + k + m, rel);
}

long long count_qhs_nodal(const Algebra& b, int k, int m) {
    int j = b.vertices();
    // Structures of b with the sink strictly below its predecessor.
    long long below = 0;
    std::vector<PartialOrder> structures = enumerate_qhs(b, QhsStrategy::via_tilting);
    for (const PartialOrder& o : structures)
        if (j == 1 || o.lt(j, j - 1)) ++below;

    if (j >= 2 && homdims(b, simple(j)).idim <= 1) {
        std::vector<int> rel;
        for (int r : b.relations())
            if (r <= j - 2) rel.push_back(r);
        Algebra truncated = make_algebra(j - 1, rel);
        long long removed = static_cast<long long>(
            enumerate_qhs(truncated, QhsStrategy::via_tilting).size());
        if (removed != below)
            throw InternalCheckFailed("sink-removed count disagrees with the enumeration");
    }

    long long total = static_cast<long long>(structures.size());
    return total * catalan(m) + below * (catalan(m + 1) + (k - 1) * catalan(m));
}

}  // namespace qln
