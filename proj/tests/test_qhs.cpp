#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "qln/qhs.hpp"
#include "qln/tilting.hpp"

using namespace qln;

namespace {

std::vector<Algebra> algebras_of(int n) {
    std::vector<Algebra> out;
    for (int mask = 0; mask < (1 << std::max(0, n - 2)); ++mask) {
        std::vector<int> rel;
        for (int b = 0; b < n - 2; ++b)
            if (mask & (1 << b)) rel.push_back(b + 2);
        out.push_back(make_algebra(n, rel));
    }
    return out;
}

const auto any_vertex = [](int) { return true; };

}  // namespace

TEST_CASE("standard and costandard modules") {
    Algebra bang3 = make_algebra(3, {2});
    StandardData s = standard_costandard(bang3, PartialOrder::chain({3, 2, 1}));
    CHECK(s.delta == std::vector<Interval>{{1, 2}, {2, 3}, {3, 3}});
    CHECK(s.nabla == std::vector<Interval>{{1, 1}, {2, 2}, {3, 3}});

    Algebra path3 = make_algebra(3, {});
    s = standard_costandard(path3, PartialOrder::chain({2, 1, 3}));
    CHECK(s.delta == std::vector<Interval>{{1, 2}, {2, 2}, {3, 3}});
    CHECK(s.nabla == std::vector<Interval>{{1, 1}, {2, 2}, {1, 3}});

    s = standard_costandard(path3, PartialOrder(1, 3));  // antichain
    for (int i = 1; i <= 3; ++i) {
        CHECK(s.delta[static_cast<size_t>(i - 1)] == simple(i));
        CHECK(s.nabla[static_cast<size_t>(i - 1)] == simple(i));
    }
}

TEST_CASE("greedy filtrations") {
    Algebra bang3 = make_algebra(3, {2});
    PartialOrder vee = PartialOrder::from_covers(1, 3, {{1, 2}, {3, 2}});  // minimum 2
    StandardData s = standard_costandard(bang3, vee);

    Filtration f = delta_filtration(bang3, {2, 3}, s, any_vertex);
    CHECK(f.member);
    CHECK(f.factors == std::vector<int>{2, 3});

    CHECK_FALSE(delta_filtration(bang3, simple(1), s, any_vertex).member);

    for (int i = 1; i <= 3; ++i) {
        Filtration d = delta_filtration(bang3, s.delta[static_cast<size_t>(i - 1)], s, any_vertex);
        CHECK(d.member);
        CHECK(d.factors == std::vector<int>{i});
    }
}

TEST_CASE("quasi-heredity of orders") {
    Algebra bang3 = make_algebra(3, {2});
    CHECK(is_quasi_hereditary(bang3, PartialOrder::chain({3, 2, 1})));
    CHECK_FALSE(is_quasi_hereditary(bang3, PartialOrder::chain({1, 3, 2})));

    // Every total order is quasi-hereditary over a path algebra.
    Algebra path3 = make_algebra(3, {});
    std::vector<int> perm{1, 2, 3};
    do {
        CHECK(is_quasi_hereditary(path3, PartialOrder::chain(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("characteristic tilting modules") {
    Algebra bang3 = make_algebra(3, {2});
    PartialOrder vee = PartialOrder::from_covers(1, 3, {{1, 2}, {3, 2}});
    LabeledTilting t = char_tilting(bang3, vee);
    CHECK(t.summands == Module{{1, 2}, {2, 2}, {2, 3}});
    CHECK(t.label[1] == simple(2));

    t = char_tilting(bang3, PartialOrder::chain({3, 2, 1}));
    CHECK(t.summands == Module{{1, 2}, {2, 3}, {3, 3}});  // the regular module

    Algebra path3 = make_algebra(3, {});
    t = char_tilting(path3, PartialOrder::chain({2, 1, 3}));
    CHECK(t.summands == Module{{1, 2}, {1, 3}, {2, 2}});

    CHECK_THROWS_AS(char_tilting(bang3, PartialOrder::chain({1, 3, 2})), NotQuasiHereditary);
}

TEST_CASE("characteristic tilting always yields n rigid summands") {
    for (int n = 1; n <= 5; ++n)
        for (const Algebra& a : algebras_of(n))
            for (const PartialOrder& o : enumerate_qhs(a, QhsStrategy::via_tilting)) {
                LabeledTilting t = char_tilting(a, o);
                CHECK(static_cast<int>(t.summands.size()) == n);
                CHECK(is_tilting(a, t.summands));
            }
}

TEST_CASE("minimal adapted orders") {
    Algebra path3 = make_algebra(3, {});
    PartialOrder mao = minimal_adapted_order(path3, PartialOrder::chain({2, 1, 3}));
    CHECK(mao.covers() == std::vector<std::pair<int, int>>{{1, 2}, {3, 1}});

    Algebra bang3 = make_algebra(3, {2});
    PartialOrder chain = PartialOrder::chain({3, 2, 1});
    CHECK(minimal_adapted_order(bang3, chain) == chain);

    Algebra big = make_algebra(10, {5, 6, 7, 9});
    Module t{{1, 1}, {1, 3}, {1, 5}, {3, 3}, {5, 6}, {6, 6}, {6, 7}, {7, 9}, {9, 10}, {10, 10}};
    PartialOrder extracted = order_from_tilting(big, t).order;
    CHECK(extracted.covers() ==
          std::vector<std::pair<int, int>>{
              {2, 1}, {2, 3}, {4, 2}, {4, 5}, {5, 6}, {7, 6}, {8, 7}, {8, 9}, {9, 10}});
}

TEST_CASE("minimal adapted order is an idempotent coarsening") {
    for (const Algebra& a : algebras_of(5)) {
        int n = a.vertices();
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        do {
            PartialOrder total = PartialOrder::chain(perm);
            if (!is_quasi_hereditary(a, total)) continue;
            PartialOrder mao = minimal_adapted_order(a, total);
            CHECK(mao.subrelation_of(total));
            CHECK(standard_costandard(a, mao).delta == standard_costandard(a, total).delta);
            CHECK(minimal_adapted_order(a, mao) == mao);
            CHECK(orders_equivalent(a, total, mao));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("order equivalence compares standard modules") {
    Algebra bang3 = make_algebra(3, {2});
    CHECK_FALSE(orders_equivalent(bang3, PartialOrder::chain({3, 2, 1}),
                                  PartialOrder::chain({1, 2, 3})));
    Algebra path3 = make_algebra(3, {});
    CHECK(orders_equivalent(path3, PartialOrder::chain({2, 1, 3}),
                            PartialOrder::from_covers(1, 3, {{1, 2}, {3, 1}})));
}

TEST_CASE("order extraction from tilting modules") {
    Algebra bang3 = make_algebra(3, {2});
    TiltingOrder ext = order_from_tilting(bang3, {{1, 2}, {2, 3}, {3, 3}});
    CHECK(ext.order == PartialOrder::chain({3, 2, 1}));
    CHECK(ext.labeled.label == std::vector<Interval>{{1, 2}, {2, 3}, {3, 3}});

    Algebra path5 = make_algebra(5, {});
    ext = order_from_tilting(path5, {{1, 1}, {1, 3}, {1, 5}, {3, 3}, {5, 5}});
    CHECK(ext.order.covers() ==
          std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {4, 2}, {4, 5}});

    // Projectives eliminate from the socle end.
    for (const Algebra& a : algebras_of(4)) {
        Module reg;
        for (int i = 1; i <= 4; ++i) reg.push_back(projective(a, i));
        PartialOrder o = order_from_tilting(a, canonicalize(reg)).order;
        StandardData s = standard_costandard(a, o);
        for (int i = 1; i <= 4; ++i) CHECK(s.delta[static_cast<size_t>(i - 1)] == projective(a, i));
    }
}

TEST_CASE("round trips between tilting modules and structures") {
    for (int n = 1; n <= 5; ++n)
        for (const Algebra& a : algebras_of(n)) {
            for (const Module& t : enumerate_tilting(a, EnumStrategy::mutation)) {
                TiltingOrder ext = order_from_tilting(a, t);
                CHECK(char_tilting(a, ext.order).summands == t);
            }
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 1);
            do {
                PartialOrder total = PartialOrder::chain(perm);
                if (!is_quasi_hereditary(a, total)) continue;
                Module t = char_tilting(a, total).summands;
                CHECK(orders_equivalent(a, order_from_tilting(a, t).order, total));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
}

TEST_CASE("adjacent vertices are comparable in quasi-hereditary orders") {
    for (const Algebra& a : algebras_of(5))
        for (const PartialOrder& o : enumerate_qhs(a, QhsStrategy::via_tilting))
            for (int i = 1; i < a.vertices(); ++i) CHECK(o.comparable(i, i + 1));
}

TEST_CASE("enumerating structures by both strategies") {
    CHECK(enumerate_qhs(make_algebra(3, {}), QhsStrategy::via_tilting).size() == 5);

    std::vector<PartialOrder> bang = enumerate_qhs(make_algebra(3, {2}), QhsStrategy::via_tilting);
    CHECK(bang.size() == 3);
    std::set<PartialOrder> expected{
        PartialOrder::chain({1, 2, 3}), PartialOrder::chain({3, 2, 1}),
        PartialOrder::from_covers(1, 3, {{1, 2}, {3, 2}})};
    CHECK(std::set<PartialOrder>(bang.begin(), bang.end()) == expected);

    CHECK(enumerate_qhs(make_algebra(10, {5, 6, 7, 9}), QhsStrategy::via_tilting).size() == 266);

    for (int n = 1; n <= 5; ++n)
        for (const Algebra& a : algebras_of(n))
            CHECK(enumerate_qhs(a, QhsStrategy::via_tilting) ==
                  enumerate_qhs(a, QhsStrategy::total_order_oracle));

    CHECK_THROWS_AS(enumerate_qhs(make_algebra(10, {5, 6, 7, 9}), QhsStrategy::total_order_oracle),
                    SizeLimitExceeded);
}
