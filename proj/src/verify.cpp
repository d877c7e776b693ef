#include "qln/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <ostream>
#include <set>
#include <sstream>

#include "qln/counting.hpp"
#include "qln/gluing.hpp"
#include "qln/qhs.hpp"
#include "qln/serialize.hpp"
#include "qln/tilting.hpp"

namespace qln {

namespace fixtures {

const char* const fkr_tree =
    R"({"label":4,"left":{"label":2,"left":{"label":1},"right":{"label":3}},"right":{"label":5}})";

const char* const sec63_tilting =
    R"([[1,1],[1,3],[1,5],[3,3],[5,6],[6,6],[6,7],[7,9],[9,10],[10,10]])";

const char* const sec63_blocks =
    R"({"blocks":[{"kind":"path","range":[1,5]},{"kind":"bang","range":[5,7]},{"kind":"path","range":[7,9]},{"kind":"path","range":[9,10]}],"cuts":[5,7,9]})";

const char* const sec63_local_tiltings =
    R"([[[1,1],[1,3],[1,5],[3,3],[5,5]],[[5,6],[6,6],[6,7]],[[7,7],[7,9],[9,9]],[[9,10],[10,10]]])";

const char* const sec63_admissible =
    R"([{"kind":"path","range":[1,5],"tree":{"label":4,"left":{"label":2,"left":{"label":1},"right":{"label":3}},"right":{"label":5}}},{"kind":"bang","range":[5,7],"apex":6},{"kind":"path","range":[7,9],"tree":{"label":8,"left":{"label":7},"right":{"label":9}}},{"kind":"path","range":[9,10],"tree":{"label":9,"right":{"label":10}}}])";

const char* const sec63_glued_order =
    R"({"n":10,"covers":[[2,1],[2,3],[4,2],[4,5],[5,6],[7,6],[8,7],[8,9],[9,10]]})";

const char* const sec63_glued_dot =
    "digraph order {\n"
    "  v1 [label=\"1\"];\n"
    "  v2 [label=\"2\"];\n"
    "  v3 [label=\"3\"];\n"
    "  v4 [label=\"4\"];\n"
    "  v5 [label=\"5\"];\n"
    "  v6 [label=\"6\"];\n"
    "  v7 [label=\"7\"];\n"
    "  v8 [label=\"8\"];\n"
    "  v9 [label=\"9\"];\n"
    "  v10 [label=\"10\"];\n"
    "  v2 -> v1;\n"
    "  v2 -> v3;\n"
    "  v4 -> v2;\n"
    "  v4 -> v5;\n"
    "  v5 -> v6;\n"
    "  v7 -> v6;\n"
    "  v8 -> v7;\n"
    "  v8 -> v9;\n"
    "  v9 -> v10;\n"
    "}\n";

}  // namespace fixtures

namespace {

using AlgebraKey = std::pair<int, std::vector<int>>;

struct Context {
    std::map<AlgebraKey, std::shared_ptr<std::vector<Module>>> tilts;
    std::map<AlgebraKey, std::shared_ptr<std::vector<PartialOrder>>> qhs;

    const std::vector<Module>& tiltings(const Algebra& a) {
        AlgebraKey key{a.vertices(), a.relations()};
        auto it = tilts.find(key);
        if (it == tilts.end())
            it = tilts.emplace(key, std::make_shared<std::vector<Module>>(
                                        enumerate_tilting(a, EnumStrategy::mutation)))
                     .first;
        return *it->second;
    }

    const std::vector<PartialOrder>& structures(const Algebra& a) {
        AlgebraKey key{a.vertices(), a.relations()};
        auto it = qhs.find(key);
        if (it == qhs.end()) {
            std::set<PartialOrder> seen;
            for (const Module& t : tiltings(a)) seen.insert(extract_tilting_order(a, t).order);
            it = qhs.emplace(key, std::make_shared<std::vector<PartialOrder>>(seen.begin(),
                                                                              seen.end()))
                     .first;
        }
        return *it->second;
    }
};

// All relation subsets of [2, n-1], in mask order.
std::vector<Algebra> all_algebras(int n) {
    std::vector<Algebra> out;
    int slots = std::max(0, n - 2);
    for (int mask = 0; mask < (1 << slots); ++mask) {
        std::vector<int> rel;
        for (int b = 0; b < slots; ++b)
            if (mask & (1 << b)) rel.push_back(b + 2);
        out.push_back(make_algebra(n, rel));
    }
    return out;
}

Algebra bang_algebra(int n) {
    std::vector<int> rel;
    for (int l = 2; l <= n - 1; ++l) rel.push_back(l);
    return make_algebra(n, rel);
}

struct Check {
    bool pass = true;
    std::string detail;
    long long checks = 0;

    void fail(const std::string& what) {
        if (pass) detail = what;
        pass = false;
    }
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) fail(what);
    }
    CriterionResult done(int id, const std::string& name, const std::string& note = "") {
        std::string d = pass ? (std::to_string(checks) + " checks" +
                                (note.empty() ? "" : ", " + note))
                             : detail;
        return {id, name, pass, d};
    }
};

CriterionResult criterion_catalan(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(10, max_n); ++n) {
        Algebra a = make_algebra(n, {});
        long long want = catalan(n);
        c.expect(count_tilt_recursive(a) == want, "recursion misses the Catalan count at n=" +
                                                      std::to_string(n));
        if (n <= 9)
            c.expect(static_cast<long long>(ctx.tiltings(a).size()) == want,
                     "mutation enumeration misses the Catalan count at n=" + std::to_string(n));
        if (n <= 7)
            c.expect(static_cast<long long>(
                         enumerate_tilting(a, EnumStrategy::exhaustive).size()) == want,
                     "exhaustive enumeration misses the Catalan count at n=" + std::to_string(n));
    }
    if (max_n >= 5) c.expect(count_tilt_recursive(make_algebra(5, {})) == 42, "C_5 != 42");
    if (max_n >= 8) c.expect(count_tilt_recursive(make_algebra(8, {})) == 1430, "C_8 != 1430");
    if (max_n >= 10) c.expect(count_tilt_recursive(make_algebra(10, {})) == 16796, "C_10 != 16796");
    return c.done(1, "Catalan counts for relation-free algebras");
}

CriterionResult criterion_bang_counts(int max_n, Context& ctx) {
    Check c;
    for (int n = 2; n <= std::min(10, max_n); ++n) {
        Algebra a = bang_algebra(n);
        c.expect(count_tilt_recursive(a) == n,
                 "recursion misses the chain count at n=" + std::to_string(n));
        TiltPoset poset = tilt_hasse(a);
        c.expect(static_cast<int>(poset.elements.size()) == n,
                 "expected n tilting modules at n=" + std::to_string(n));
        c.expect(static_cast<int>(poset.edges.size()) == n - 1,
                 "expected a path with n-1 edges at n=" + std::to_string(n));
        // A path: walk from the maximum through unique successors.
        std::vector<int> succ(poset.elements.size(), -1);
        bool simple = true;
        for (const auto& e : poset.edges) {
            if (succ[static_cast<size_t>(e.source)] != -1) simple = false;
            succ[static_cast<size_t>(e.source)] = e.target;
        }
        int at = poset.maximum, steps = 0;
        std::set<int> seen{at};
        while (simple && succ[static_cast<size_t>(at)] != -1) {
            at = succ[static_cast<size_t>(at)];
            if (!seen.insert(at).second) simple = false;
            ++steps;
        }
        c.expect(simple && steps == n - 1 && static_cast<int>(seen.size()) == n,
                 "Hasse quiver is not a path at n=" + std::to_string(n));
        (void)ctx;
    }
    return c.done(2, "radical-square-zero chains: n tilting modules in a path");
}

CriterionResult criterion_strategy_agreement(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(7, max_n); ++n)
        for (const Algebra& a : all_algebras(n)) {
            std::vector<Module> ex = enumerate_tilting(a, EnumStrategy::exhaustive);
            c.expect(ex == ctx.tiltings(a),
                     "strategies disagree on " + to_text(a));
        }
    return c.done(3, "exhaustive and mutation enumeration agree");
}

CriterionResult criterion_extraction(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(7, max_n); ++n)
        for (const Algebra& a : all_algebras(n))
            for (const Module& t : ctx.tiltings(a)) {
                try {
                    TiltingOrder ext = order_from_tilting(a, t);  // sweeps all branches
                    LabeledTilting back = char_tilting(a, ext.order);
                    c.expect(back.summands == t,
                             "characteristic tilting round trip fails on " + to_text(a));
                    c.expect(back.label == ext.labeled.label,
                             "labels disagree with the characteristic labels on " + to_text(a));
                } catch (const DomainError& e) {
                    c.expect(false, std::string("extraction failed: ") + e.what());
                }
            }
    return c.done(4, "every tilting module is labellable, branches agree, round trip holds");
}

CriterionResult criterion_oracle(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(6, max_n); ++n)
        for (const Algebra& a : all_algebras(n)) {
            std::vector<PartialOrder> oracle = enumerate_qhs(a, QhsStrategy::total_order_oracle);
            c.expect(oracle.size() == ctx.tiltings(a).size(),
                     "class count differs from tilting count on " + to_text(a));
            c.expect(oracle == ctx.structures(a),
                     "oracle and tilting-side structures differ on " + to_text(a));
            for (const PartialOrder& o : oracle) {
                LabeledTilting t = char_tilting(a, o);
                c.expect(static_cast<int>(t.summands.size()) == n && is_tilting(a, t.summands),
                         "class representative is not an n-summand tilting module on " +
                             to_text(a));
            }
        }
    return c.done(5, "total-order oracle matches the tilting bijection");
}

CriterionResult criterion_reciprocity(int max_n, Context& ctx) {
    Check c;
    auto all = [](int) { return true; };
    for (int n = 1; n <= std::min(6, max_n); ++n)
        for (const Algebra& a : all_algebras(n))
            for (const PartialOrder& o : ctx.structures(a)) {
                StandardData std_data = standard_costandard(a, o);
                for (int i = 1; i <= n; ++i) {
                    Filtration pd = delta_filtration(a, projective(a, i), std_data, all);
                    Filtration in = nabla_filtration(a, injective(a, i), std_data, all);
                    c.expect(pd.member && in.member, "structural filtration missing on " +
                                                         to_text(a));
                    for (int j = 1; j <= n; ++j) {
                        long long pj = std::count(pd.factors.begin(), pd.factors.end(), j);
                        long long ij = std::count(in.factors.begin(), in.factors.end(), j);
                        long long nab = std_data.nabla[static_cast<size_t>(j - 1)].contains(i);
                        long long del = std_data.delta[static_cast<size_t>(j - 1)].contains(i);
                        c.expect(pj == nab, "projective-costandard reciprocity fails on " +
                                                to_text(a));
                        c.expect(ij == del, "injective-standard reciprocity fails on " +
                                                to_text(a));
                    }
                }
            }
    return c.done(6, "multiplicity reciprocity holds for every structure");
}

CriterionResult criterion_decomposition(int max_n, Context& ctx) {
    Check c;
    for (int n = 2; n <= std::min(7, max_n); ++n)
        for (const Algebra& a : all_algebras(n)) {
            int l = a.relations().empty() ? 1 : a.relations().back();
            std::map<int, int> fibers;
            for (const Module& t : ctx.tiltings(a)) {
                try {
                    int i = classify_decomposition(a, t);
                    c.expect(i >= l && i <= n, "cell index out of range on " + to_text(a));
                    ++fibers[i];
                } catch (const DomainError& e) {
                    c.expect(false, std::string("classification failed: ") + e.what());
                }
            }
            long long total = 0;
            for (int i = l; i <= n; ++i) {
                c.expect(fibers.count(i) == 1, "empty cell at i=" + std::to_string(i) + " on " +
                                                   to_text(a));
                total += fibers.count(i) ? fibers[i] : 0;
            }
            c.expect(total == static_cast<long long>(ctx.tiltings(a).size()),
                     "cells do not partition the tilting set on " + to_text(a));
        }
    if (max_n >= 3) {
        Algebra a3 = bang_algebra(3);
        std::map<int, int> fib;
        for (const Module& t : ctx.tiltings(a3)) ++fib[classify_decomposition(a3, t)];
        c.expect(fib[2] == 2 && fib[3] == 1, "chain algebra fibers are not (2,1)");
        Algebra p3 = make_algebra(3, {});
        fib.clear();
        for (const Module& t : ctx.tiltings(p3)) ++fib[classify_decomposition(p3, t)];
        c.expect(fib[1] == 2 && fib[2] == 1 && fib[3] == 2, "path fibers are not (2,1,2)");
    }
    return c.done(7, "tilting set partitions by the sink cell");
}

CriterionResult criterion_recursion(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(9, max_n); ++n)
        for (const Algebra& a : all_algebras(n))
            c.expect(count_tilt_recursive(a) == static_cast<long long>(ctx.tiltings(a).size()),
                     "recursion disagrees with enumeration on " + to_text(a));
    if (max_n >= 10)
        c.expect(count_tilt_recursive(make_algebra(10, {5, 6, 7, 9})) == 266,
                 "10:5,6,7,9 does not count 266");
    return c.done(8, "counting recursion equals enumeration");
}

CriterionResult criterion_gluing(int max_n, Context& ctx) {
    Check c;
    for (int n = 2; n <= std::min(7, max_n); ++n)
        for (const Algebra& a : all_algebras(n)) {
            BlockDecomposition dec = block_decomposition(a);
            for (int v : dec.cuts) {
                // Side algebras; the right one is enumerated on [1, n-v+1]
                // and shifted back.
                std::vector<int> left_rel, right_rel;
                for (int r : a.relations()) {
                    if (r < v) left_rel.push_back(r);
                    if (r > v) right_rel.push_back(r - v + 1);
                }
                Algebra left = make_algebra(v, left_rel);
                Algebra right = make_algebra(n - v + 1, right_rel);
                std::set<std::pair<PartialOrder, PartialOrder>> image;
                for (const PartialOrder& o : ctx.structures(a))
                    image.emplace(o.restricted(1, v), o.restricted(v, n));
                c.expect(image.size() == ctx.structures(a).size(),
                         "restriction is not injective at cut " + std::to_string(v) + " on " +
                             to_text(a));
                std::set<std::pair<PartialOrder, PartialOrder>> delta_pairs, nabla_pairs;
                for (const PartialOrder& ol : ctx.structures(left))
                    for (const PartialOrder& orr : ctx.structures(right)) {
                        PartialOrder shifted = orr.shifted(v - 1);
                        GluingCheck g = gluing_conditions(ol, shifted, v);
                        if (g.delta_ok) delta_pairs.emplace(ol, shifted);
                        if (g.nabla_ok) nabla_pairs.emplace(ol, shifted);
                    }
                c.expect(image == delta_pairs, "image differs from the delta pairs at cut " +
                                                   std::to_string(v) + " on " + to_text(a));
                c.expect(image == nabla_pairs, "image differs from the nabla pairs at cut " +
                                                   std::to_string(v) + " on " + to_text(a));
            }
        }
    return c.done(9, "restriction image matches both gluing conditions at every cut");
}

CriterionResult criterion_fixtures(int max_n, Context& ctx) {
    Check c;
    (void)ctx;
    if (max_n >= 5) {
        Module t = module_from_json(json::parse(R"([[1,1],[1,3],[3,3],[1,5],[5,5]])"));
        BinaryTree tree = tree_of_tilting(1, 5, t);
        c.expect(to_json(tree).dump() == fixtures::fkr_tree, "path-block tree fixture differs");
        c.expect(tilting_of_tree(tree) == t, "tree does not invert back to its tilting module");
    }
    if (max_n >= 10) {
        Algebra a = make_algebra(10, {5, 6, 7, 9});
        c.expect(to_json(block_decomposition(a)).dump() == fixtures::sec63_blocks,
                 "block decomposition fixture differs");
        Module t = module_from_json(json::parse(fixtures::sec63_tilting));
        c.expect(is_tilting(a, t), "fixture module is not tilting");
        AdmissibleSequence seq = admissible_from_tilting(a, t);
        json locals = json::array();
        for (size_t i = 0; i < seq.blocks.blocks.size(); ++i)
            locals.push_back(to_json(tilting_of_local(seq.blocks.blocks[i], seq.locals[i])));
        c.expect(locals.dump() == fixtures::sec63_local_tiltings,
                 "local tilting fixture differs");
        c.expect(to_json(seq).dump() == fixtures::sec63_admissible,
                 "admissible sequence fixture differs");
        PartialOrder order = order_from_tilting(a, t).order;
        c.expect(to_json(order).dump() == fixtures::sec63_glued_order,
                 "glued order fixture differs");
        c.expect(emit_dot(order) == fixtures::sec63_glued_dot, "glued DOT fixture differs");
        Assembled back = admissible_validate_assemble(a, seq);
        c.expect(back.order == order && back.tilting == t,
                 "assembly does not invert the restriction");
    }
    return c.done(10, "worked-example fixtures are byte-exact");
}

CriterionResult criterion_tree_shape(int max_n, Context& ctx) {
    Check c;
    for (int n = 1; n <= std::min(7, max_n); ++n)
        for (const Algebra& a : all_algebras(n))
            for (const PartialOrder& o : ctx.structures(a)) {
                auto covers = o.covers();
                bool tree = static_cast<int>(covers.size()) == n - 1;
                // Connectivity of the underlying undirected graph.
                std::vector<int> comp(static_cast<size_t>(n));
                for (int i = 0; i < n; ++i) comp[static_cast<size_t>(i)] = i;
                auto find = [&](int x) {
                    while (comp[static_cast<size_t>(x)] != x) x = comp[static_cast<size_t>(x)];
                    return x;
                };
                for (auto [g, l] : covers) comp[static_cast<size_t>(find(g - 1))] = find(l - 1);
                for (int i = 0; i < n; ++i)
                    if (find(i) != find(0)) tree = false;
                c.expect(tree, "a structure of " + to_text(a) + " is not a tree");
            }
    return c.done(11, "every minimal adapted order has a tree Hasse diagram");
}

CriterionResult criterion_nodal_counting(int max_n, Context& ctx) {
    Check c;
    int bound = std::min(9, max_n);
    for (int j = 1; j <= bound - 1; ++j)
        for (const Algebra& b : all_algebras(j))
            for (int k = 0; j + k + 1 <= bound; ++k)
                for (int m = 1; j + k + m <= bound; ++m) {
                    Algebra glued = nodal_glued_algebra(b, k, m);
                    long long want = static_cast<long long>(ctx.structures(glued).size());
                    c.expect(count_qhs_nodal(b, k, m) == want,
                             "nodal count fails for base " + to_text(b) + " k=" +
                                 std::to_string(k) + " m=" + std::to_string(m));
                }
    // Sub-counts for the two local families.
    for (int k = 1; k + 1 <= std::min(7, max_n) && k <= 6; ++k) {
        const auto& structs = ctx.structures(bang_algebra(k + 1));
        long long up = 0;
        for (const PartialOrder& o : structs)
            if (o.lt(1, 2)) ++up;
        c.expect(static_cast<long long>(structs.size()) == k + 1 && up == 1 &&
                     static_cast<long long>(structs.size()) - up == k,
                 "chain-family sub-count fails at k=" + std::to_string(k));
    }
    for (int m = 1; m + 1 <= std::min(7, max_n) && m <= 6; ++m) {
        const auto& structs = ctx.structures(make_algebra(m + 1, {}));
        long long up = 0;
        for (const PartialOrder& o : structs)
            if (o.lt(1, 2)) ++up;
        c.expect(static_cast<long long>(structs.size()) == catalan(m + 1) && up == catalan(m),
                 "path-family sub-count fails at m=" + std::to_string(m));
    }
    return c.done(12, "nodal counting recursion matches enumeration");
}

}  // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CriterionResult> run_acceptance(int max_n, std::ostream* progress) {
    using Clock = std::chrono::steady_clock;
    Clock::time_point start = Clock::now();
    Context ctx;
    std::vector<CriterionResult> results;
    auto push = [&](CriterionResult r) {
        if (progress) {
            (*progress) << "criterion " << r.id << (r.pass ? " PASS " : " FAIL ") << r.name
                        << " (" << r.detail << ")\n";
            progress->flush();
        }
        results.push_back(std::move(r));
    };
    push(criterion_catalan(max_n, ctx));
    push(criterion_bang_counts(max_n, ctx));
    push(criterion_strategy_agreement(max_n, ctx));
    push(criterion_extraction(max_n, ctx));
    push(criterion_oracle(max_n, ctx));
    push(criterion_reciprocity(max_n, ctx));
    push(criterion_decomposition(max_n, ctx));
    push(criterion_recursion(max_n, ctx));
    push(criterion_gluing(max_n, ctx));
    push(criterion_fixtures(max_n, ctx));
    push(criterion_tree_shape(max_n, ctx));
    push(criterion_nodal_counting(max_n, ctx));

    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::ostringstream detail;
    detail.precision(1);
    detail << std::fixed << seconds << "s for criteria 1-12 at max-n " << max_n
           << "; the bound is 300s";
    CriterionResult timing{13, "suite completes in under five minutes", seconds < 300.0,
                           detail.str()};
    push(timing);
    return results;
}

}  // namespace qln
