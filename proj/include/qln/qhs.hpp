// Standard and costandard modules, quasi-heredity checking, filtration
// multiplicities, characteristic tilting modules, minimal adapted orders, and
// both directions of the correspondence between tilting modules and
// quasi-hereditary structures.

#pragma once

#include <functional>
#include <vector>

#include "qln/algebra.hpp"
#include "qln/poset.hpp"

namespace qln {

struct StandardData {
    // Indexed by vertex - 1; delta[i-1] = maximal quotient of P(i) with all
    // factors below i, nabla[i-1] the dual submodule of I(i).
    std::vector<Interval> delta;
    std::vector<Interval> nabla;
};

StandardData standard_costandard(const Algebra& a, const PartialOrder& order);

struct Filtration {
    bool member = false;
    std::vector<int> factors;  // factor indices, empty when not a member
};

// Greedy top-down filtration by standard modules: the top factor of M[a,b]
// must be Delta(a), which makes membership decidable without search.  The
// allowed predicate restricts which Delta(i) may appear.
Filtration delta_filtration(const Algebra& a, Interval m, const StandardData& std_data,
                            const std::function<bool(int)>& allowed);
// Dual: greedy from the socle by costandard modules.
Filtration nabla_filtration(const Algebra& a, Interval m, const StandardData& std_data,
                            const std::function<bool(int)>& allowed);

bool is_quasi_hereditary(const Algebra& a, const PartialOrder& order);

struct LabeledTilting {
    Module summands;
    std::vector<Interval> label;  // label[i-1] = T(i)
};

// The tilting module with add T = F(Delta) intersect F(Nabla), labeled so
// that all factors of T(i) lie below i.  Throws NotQuasiHereditary.
LabeledTilting char_tilting(const Algebra& a, const PartialOrder& order);

// Transitive closure of the composition-factor relations of the standard and
// costandard modules: the coarsest order with the same standard data.
PartialOrder minimal_adapted_order(const Algebra& a, const PartialOrder& order);

// Same standard modules.
bool orders_equivalent(const Algebra& a, const PartialOrder& o1, const PartialOrder& o2);

struct TiltingOrder {
    LabeledTilting labeled;
    PartialOrder order;  // minimal adapted order
};

// Labels the summands of a tilting module by iterated elimination: repeatedly
// pick a summand whose not-yet-removed support is a single vertex x, label it
// T(x) and remove x.  All completed branches are explored and must agree on
// the resulting minimal adapted order and labeling; disagreement or a dead
// end raises ExtractionFailed.
TiltingOrder order_from_tilting(const Algebra& a, const Module& t);

// First-completion variant: returns the result of the first elimination
// branch without sweeping the rest.  Branch confluence makes the value equal
// to order_from_tilting; use where the sweep is redundant.
TiltingOrder extract_tilting_order(const Algebra& a, const Module& t);

enum class QhsStrategy { via_tilting, total_order_oracle };

// All quasi-hereditary structures as minimal adapted orders, sorted.  The
// oracle strategy sweeps all n! total orders and groups them by standard
// data; it refuses n beyond size_limit.
std::vector<PartialOrder> enumerate_qhs(const Algebra& a, QhsStrategy strategy,
                                        int size_limit = 8);

}  // namespace qln
