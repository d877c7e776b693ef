// Left approximations, tilting mutation, tilting enumeration (exhaustive
// backtracking and mutation closure) and the tilting partial order with its
// Hasse quiver.

#pragma once

#include <optional>
#include <vector>

#include "qln/algebra.hpp"
#include "qln/homological.hpp"

namespace qln {

struct LeftApproximation {
    Module targets;  // minimal approximation X -> direct sum of targets
    bool injective;
};

// Minimal left add(U)-approximation of X.  Targets are the maximal elements,
// under componentwise (top, socle), of the summands of U receiving a nonzero
// map from X; the map is injective iff some target shares X's socle.
LeftApproximation min_left_approx(const Algebra& a, Interval x, const Module& u);

// Decomposition of coker(X -> sum of targets) into intervals, recovered from
// path-composite ranks by inclusion-exclusion.  Pure integer arithmetic.
Module cokernel_decomposition(const Algebra& a, Interval x, const Module& targets);

// Left mutation of the tilting module T at summand X, or nullopt when the
// approximation is not injective (X is not left-mutable).  The replacement is
// found by a complement scan and cross-checked against the cokernel of the
// minimal approximation.
std::optional<Module> left_mutation(const Algebra& a, const Module& t, Interval x);
std::optional<Module> left_mutation(const ExtTable& table, const Module& t, Interval x);

enum class EnumStrategy { exhaustive, mutation };

// All basic tilting modules, sorted lexicographically.  The exhaustive
// strategy backtracks over rigid subsets and refuses n beyond size_limit.
std::vector<Module> enumerate_tilting(const Algebra& a, EnumStrategy strategy,
                                      int size_limit = 12);

// T >= U in the tilting order: Ext^{>0}(T, U) = 0.
bool tilt_geq(const Algebra& a, const Module& t, const Module& u);

struct TiltPoset {
    std::vector<Module> elements;  // sorted lexicographically
    struct Edge {
        int source;
        int target;
        Interval mutated;
    };
    std::vector<Edge> edges;  // irreducible left mutations, sorted by (source, mutated)
    int maximum = 0;          // index of the regular module P(1) + ... + P(n)
};

TiltPoset tilt_hasse(const Algebra& a);

}  // namespace qln
