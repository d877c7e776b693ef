#include "qln/qhs.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qln/tilting.hpp"

namespace qln {

StandardData standard_costandard(const Algebra& a, const PartialOrder& order) {
    int n = a.vertices();
    StandardData out;
    out.delta.resize(static_cast<size_t>(n));
    out.nabla.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int d = i;
        int e = a.projective_socle(i);
        while (d + 1 <= e && order.lt(d + 1, i)) ++d;
        out.delta[static_cast<size_t>(i - 1)] = {i, d};
        int c = i;
        int f = a.injective_top(i);
        while (c - 1 >= f && order.lt(c - 1, i)) --c;
        out.nabla[static_cast<size_t>(i - 1)] = {c, i};
    }
    return out;
}

Filtration delta_filtration(const Algebra& a, Interval m, const StandardData& std_data,
                            const std::function<bool(int)>& allowed) {
    Filtration out;
    int top = m.top;
    while (true) {
        Interval d = std_data.delta[static_cast<size_t>(top - 1)];
        if (!allowed(top) || d.socle > m.socle) return {};
        out.factors.push_back(top);
        if (d.socle == m.socle) break;
        top = d.socle + 1;
    }
    (void)a;
    out.member = true;
    return out;
}

Filtration nabla_filtration(const Algebra& a, Interval m, const StandardData& std_data,
                            const std::function<bool(int)>& allowed) {
    Filtration out;
    int socle = m.socle;
    while (true) {
        Interval c = std_data.nabla[static_cast<size_t>(socle - 1)];
        if (!allowed(socle) || c.top < m.top) return {};
        out.factors.push_back(socle);
        if (c.top == m.top) break;
        socle = c.top - 1;
    }
    (void)a;
    out.member = true;
    return out;
}

bool is_quasi_hereditary(const Algebra& a, const PartialOrder& order) {
    StandardData std_data = standard_costandard(a, order);
    // (qh1) is automatic: intervals are multiplicity-free.
    for (int i = 1; i <= a.vertices(); ++i) {
        Interval d = std_data.delta[static_cast<size_t>(i - 1)];
        int e = a.projective_socle(i);
        if (d.socle == e) continue;  // Delta(i) = P(i)
        Interval kernel{d.socle + 1, e};
        auto above_i = [&](int x) { return order.lt(i, x); };
        if (!delta_filtration(a, kernel, std_data, above_i).member) return false;
    }
    return true;
}

LabeledTilting char_tilting(const Algebra& a, const PartialOrder& order) {
    if (!is_quasi_hereditary(a, order))
        throw NotQuasiHereditary("order does not make the algebra quasi-hereditary");
    StandardData std_data = standard_costandard(a, order);
    auto all = [](int) { return true; };
    LabeledTilting out;
    out.label.resize(static_cast<size_t>(a.vertices()));
    for (const Interval& m : indecomposables(a)) {
        if (!delta_filtration(a, m, std_data, all).member) continue;
        if (!nabla_filtration(a, m, std_data, all).member) continue;
        out.summands.push_back(m);
        // Label by the order-maximum of the composition factors.
        int label = -1;
        for (int x = m.top; x <= m.socle; ++x) {
            bool is_max = true;
            for (int y = m.top; y <= m.socle; ++y)
                if (y != x && !order.leq(y, x)) is_max = false;
            if (is_max) {
                if (label != -1)
                    throw InternalCheckFailed("two maximal factors in a characteristic summand");
                label = x;
            }
        }
        if (label == -1)
            throw InternalCheckFailed("no maximal factor in a characteristic summand " +
                                      to_string(m));
        if (out.label[static_cast<size_t>(label - 1)] != Interval{})
            throw InternalCheckFailed("duplicate characteristic label " + std::to_string(label));
        out.label[static_cast<size_t>(label - 1)] = m;
    }
    if (static_cast<int>(out.summands.size()) != a.vertices())
        throw InternalCheckFailed("characteristic tilting module has " +
                                  std::to_string(out.summands.size()) + " summands");
    return out;
}

PartialOrder minimal_adapted_order(const Algebra& a, const PartialOrder& order) {
    if (!is_quasi_hereditary(a, order))
        throw NotQuasiHereditary("order does not make the algebra quasi-hereditary");
    StandardData std_data = standard_costandard(a, order);
    PartialOrder out(1, a.vertices());
    for (int j = 1; j <= a.vertices(); ++j) {
        Interval d = std_data.delta[static_cast<size_t>(j - 1)];
        for (int i = d.top; i <= d.socle; ++i) out.add(i, j);
        Interval c = std_data.nabla[static_cast<size_t>(j - 1)];
        for (int i = c.top; i <= c.socle; ++i) out.add(i, j);
    }
    out.close();
    return out;
}

bool orders_equivalent(const Algebra& a, const PartialOrder& o1, const PartialOrder& o2) {
    if (!is_quasi_hereditary(a, o1) || !is_quasi_hereditary(a, o2))
        throw NotQuasiHereditary("orders_equivalent requires quasi-hereditary orders");
    return standard_costandard(a, o1).delta == standard_costandard(a, o2).delta;
}

namespace {

struct ExtractionState {
    const Algebra* a = nullptr;
    const Module* t = nullptr;
    int n = 0;
    bool first_only = false;
    std::vector<char> removed;          // by vertex
    std::vector<char> used;             // by summand position
    std::vector<Interval> label;        // by vertex - 1
    std::vector<int> chain;             // elimination order, bottom first
    bool have_result = false;
    TiltingOrder result;

    void complete() {
        PartialOrder total = PartialOrder::chain(chain);
        PartialOrder mao = minimal_adapted_order(*a, total);
        if (!have_result) {
            have_result = true;
            result.order = mao;
            result.labeled.summands = *t;
            result.labeled.label = label;
        } else {
            if (!(result.order == mao))
                throw ExtractionFailed("elimination branches disagree on the minimal adapted order");
            if (result.labeled.label != label)
                throw ExtractionFailed("elimination branches disagree on the labeling");
        }
    }

    void dfs() {
        if (first_only && have_result) return;
        if (static_cast<int>(chain.size()) == n) {
            complete();
            return;
        }
        for (size_t pos = 0; pos < t->size(); ++pos) {
            if (used[pos]) continue;
            const Interval& m = (*t)[pos];
            int live = 0, x = 0;
            for (int v = m.top; v <= m.socle; ++v)
                if (!removed[static_cast<size_t>(v)]) {
                    ++live;
                    x = v;
                }
            if (live != 1) continue;
            used[pos] = 1;
            removed[static_cast<size_t>(x)] = 1;
            label[static_cast<size_t>(x - 1)] = m;
            chain.push_back(x);
            dfs();
            chain.pop_back();
            label[static_cast<size_t>(x - 1)] = Interval{};
            removed[static_cast<size_t>(x)] = 0;
            used[pos] = 0;
        }
    }
};

TiltingOrder run_extraction(const Algebra& a, const Module& t, bool first_only) {
    if (!is_tilting(a, t)) throw NotTilting("input is not a basic tilting module");
    ExtractionState state;
    state.a = &a;
    state.t = &t;
    state.n = a.vertices();
    state.first_only = first_only;
    state.removed.assign(static_cast<size_t>(state.n) + 1, 0);
    state.used.assign(t.size(), 0);
    state.label.resize(static_cast<size_t>(state.n));
    state.dfs();
    if (!state.have_result)
        throw ExtractionFailed("no elimination order exposes a simple summand at every step");
    return state.result;
}

}  // namespace

TiltingOrder order_from_tilting(const Algebra& a, const Module& t) {
    return run_extraction(a, t, false);
}

TiltingOrder extract_tilting_order(const Algebra& a, const Module& t) {
    return run_extraction(a, t, true);
}

std::vector<PartialOrder> enumerate_qhs(const Algebra& a, QhsStrategy strategy, int size_limit) {
    std::vector<PartialOrder> out;
    if (strategy == QhsStrategy::via_tilting) {
        std::vector<Module> tilts = enumerate_tilting(a, EnumStrategy::mutation);
        std::set<PartialOrder> seen;
        for (const Module& t : tilts) seen.insert(extract_tilting_order(a, t).order);
        if (seen.size() != tilts.size())
            throw InternalCheckFailed("distinct tilting modules produced equal orders");
        out.assign(seen.begin(), seen.end());
    } else {
        if (a.vertices() > size_limit)
            throw SizeLimitExceeded("total-order oracle limited to n <= " +
                                    std::to_string(size_limit));
        std::vector<int> perm(static_cast<size_t>(a.vertices()));
        std::iota(perm.begin(), perm.end(), 1);
        std::map<std::vector<Interval>, PartialOrder> classes;
        do {
            PartialOrder total = PartialOrder::chain(perm);
            if (!is_quasi_hereditary(a, total)) continue;
            std::vector<Interval> key = standard_costandard(a, total).delta;
            if (!classes.contains(key)) classes.emplace(key, minimal_adapted_order(a, total));
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (auto& [key, mao] : classes) out.push_back(mao);
        std::sort(out.begin(), out.end());
    }
    return out;
}

}  // namespace qln
