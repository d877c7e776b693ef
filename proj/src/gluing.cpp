#include "qln/gluing.hpp"

#include <algorithm>
#include <map>

#include "qln/homological.hpp"
#include "qln/qhs.hpp"

namespace qln {

BlockDecomposition block_decomposition(const Algebra& a) {
    BlockDecomposition out;
    const std::vector<int>& relv = a.relations();
    std::vector<std::pair<int, int>> bang_spans;
    for (size_t i = 0; i < relv.size();) {
        size_t j = i;
        while (j + 1 < relv.size() && relv[j + 1] == relv[j] + 1) ++j;
        int p = relv[i], q = relv[j];
        if (p == q) {
            out.cuts.push_back(p);
        } else {
            out.cuts.push_back(p);
            out.cuts.push_back(q);
            bang_spans.emplace_back(p, q);
        }
        i = j + 1;
    }
    std::vector<int> anchors{1};
    anchors.insert(anchors.end(), out.cuts.begin(), out.cuts.end());
    if (anchors.back() != a.vertices()) anchors.push_back(a.vertices());
    for (size_t i = 0; i + 1 < anchors.size(); ++i) {
        int u = anchors[i], w = anchors[i + 1];
        bool bang = std::find(bang_spans.begin(), bang_spans.end(), std::make_pair(u, w)) !=
                    bang_spans.end();
        out.blocks.push_back({bang ? BlockKind::bang : BlockKind::path, u, w});
    }
    if (out.blocks.empty()) out.blocks.push_back({BlockKind::path, 1, a.vertices()});
    return out;
}

std::pair<int, int> BinaryTree::span(int v) const {
    int mn = v, mx = v;
    if (int l = left_child(v)) mn = span(l).first;
    if (int r = right_child(v)) mx = span(r).second;
    return {mn, mx};
}

namespace {

void check_tree(const BinaryTree& t, int v, int lo, int hi) {
    if (v < lo || v > hi) throw NotATree("node " + std::to_string(v) + " outside its window");
    int l = t.left_child(v), r = t.right_child(v);
    if (v == lo) {
        if (l != 0) throw NotATree("node " + std::to_string(v) + " has an impossible left child");
    } else {
        if (l == 0) throw NotATree("window [" + std::to_string(lo) + "," + std::to_string(v - 1) +
                                   "] is not covered");
        check_tree(t, l, lo, v - 1);
    }
    if (v == hi) {
        if (r != 0) throw NotATree("node " + std::to_string(v) + " has an impossible right child");
    } else {
        if (r == 0) throw NotATree("window [" + std::to_string(v + 1) + "," + std::to_string(hi) +
                                   "] is not covered");
        check_tree(t, r, v + 1, hi);
    }
}

}  // namespace

BinaryTree make_binary_tree(int lo, int hi, int root, std::vector<int> left,
                            std::vector<int> right) {
    if (hi < lo) throw NotATree("empty label window");
    size_t size = static_cast<size_t>(hi - lo + 1);
    if (left.size() != size || right.size() != size)
        throw NotATree("child arrays do not match the label window");
    BinaryTree t;
    t.lo = lo;
    t.hi = hi;
    t.root = root;
    t.left = std::move(left);
    t.right = std::move(right);
    check_tree(t, root, lo, hi);
    return t;
}

PartialOrder glue_orders(const PartialOrder& a, const PartialOrder& b) {
    if (a.hi() != b.lo())
        throw NotAPartialOrder("orders must overlap in exactly one vertex, got [" +
                               std::to_string(a.lo()) + "," + std::to_string(a.hi()) + "] and [" +
                               std::to_string(b.lo()) + "," + std::to_string(b.hi()) + "]");
    PartialOrder out(a.lo(), b.hi());
    for (int x = a.lo(); x <= a.hi(); ++x)
        for (int y = a.lo(); y <= a.hi(); ++y)
            if (a.leq(x, y)) out.add(x, y);
    for (int x = b.lo(); x <= b.hi(); ++x)
        for (int y = b.lo(); y <= b.hi(); ++y)
            if (b.leq(x, y)) out.add(x, y);
    out.close();
    return out;
}

GluingCheck gluing_conditions(const PartialOrder& left, const PartialOrder& right, int v) {
    bool left_up = v - 1 >= left.lo() && left.lt(v - 1, v);
    bool right_up = v + 1 <= right.hi() && right.lt(v + 1, v);
    bool delta_ok = !left_up || (v + 1 <= right.hi() && right.lt(v, v + 1));
    bool nabla_ok = !right_up || (v - 1 >= left.lo() && left.lt(v, v - 1));
    return {delta_ok, nabla_ok};
}

PartialOrder restrict_order(const PartialOrder& order, int s, int t) {
    return order.restricted(s, t);
}

PartialOrder order_of_tree(const BinaryTree& tree) {
    std::vector<std::pair<int, int>> covers;
    for (int v = tree.lo; v <= tree.hi; ++v) {
        if (int l = tree.left_child(v)) covers.emplace_back(v, l);
        if (int r = tree.right_child(v)) covers.emplace_back(v, r);
    }
    return PartialOrder::from_covers(tree.lo, tree.hi, covers);
}

BinaryTree tree_of_order(const PartialOrder& order) {
    size_t size = static_cast<size_t>(order.size());
    std::vector<int> left(size, 0), right(size, 0);
    auto rec = [&](auto&& self, int s, int t) -> int {
        PartialOrder window = order.restricted(s, t);
        std::vector<int> maxima = window.maximal_elements();
        if (maxima.size() != 1)
            throw NotATree("window [" + std::to_string(s) + "," + std::to_string(t) +
                           "] has no unique maximum");
        int v = maxima.front();
        if (v > s) left[static_cast<size_t>(v - order.lo())] = self(self, s, v - 1);
        if (v < t) right[static_cast<size_t>(v - order.lo())] = self(self, v + 1, t);
        return v;
    };
    int root = rec(rec, order.lo(), order.hi());
    BinaryTree t = make_binary_tree(order.lo(), order.hi(), root, std::move(left), std::move(right));
    if (!(order_of_tree(t) == order))
        throw NotATree("Hasse diagram is not the binary tree of its maxima");
    return t;
}

Module tilting_of_tree(const BinaryTree& tree) {
    Module out;
    for (int v = tree.lo; v <= tree.hi; ++v) {
        auto [mn, mx] = tree.span(v);
        out.push_back({mn, mx});
    }
    return canonicalize(out);
}

BinaryTree tree_of_tilting(int lo, int hi, const Module& t) {
    Module sorted = canonicalize(t);
    if (static_cast<int>(sorted.size()) != hi - lo + 1)
        throw NotTilting("expected " + std::to_string(hi - lo + 1) + " summands, got " +
                         std::to_string(sorted.size()));
    std::stable_sort(sorted.begin(), sorted.end(), [](Interval a, Interval b) {
        return std::pair(a.length(), a.top) < std::pair(b.length(), b.top);
    });
    size_t size = static_cast<size_t>(hi - lo + 1);
    std::vector<int> left(size, 0), right(size, 0);
    // Components of the growing forest: root -> span.
    std::map<int, std::pair<int, int>> components;
    for (const Interval& x : sorted) {
        if (x.top < lo || x.socle > hi) throw NotTilting(to_string(x) + " is outside the block");
        int left_root = 0, right_root = 0;
        int covered_lo = x.top, covered_hi = x.socle;  // window still uncovered
        for (auto& [root, span] : components) {
            bool inside = x.top <= span.first && span.second <= x.socle;
            bool disjoint = span.second < x.top || x.socle < span.first;
            if (!inside && !disjoint)
                throw NotTilting("summands " + to_string(x) + " and the component at " +
                                 std::to_string(root) + " overlap without nesting");
            if (!inside) continue;
            if (span.first == x.top && left_root == 0) {
                left_root = root;
                covered_lo = span.second + 1;
            } else if (span.second == x.socle && right_root == 0) {
                right_root = root;
                covered_hi = span.first - 1;
            } else {
                throw NotTilting("components under " + to_string(x) + " do not flank one vertex");
            }
        }
        if (covered_lo != covered_hi)
            throw NotTilting("summand " + to_string(x) + " introduces " +
                             std::to_string(covered_hi - covered_lo + 1) + " new vertices");
        int node = covered_lo;
        left[static_cast<size_t>(node - lo)] = left_root;
        right[static_cast<size_t>(node - lo)] = right_root;
        if (left_root) components.erase(left_root);
        if (right_root) components.erase(right_root);
        components[node] = {x.top, x.socle};
    }
    if (components.size() != 1 || components.begin()->second != std::pair(lo, hi))
        throw NotTilting("summands do not assemble into a single tree over the block");
    return make_binary_tree(lo, hi, components.begin()->first, std::move(left), std::move(right));
}

PartialOrder vshape_order(int lo, int hi, int apex) {
    if (apex < lo || apex > hi)
        throw ApexOutOfRange("apex " + std::to_string(apex) + " outside [" + std::to_string(lo) +
                             "," + std::to_string(hi) + "]");
    PartialOrder out(lo, hi);
    for (int x = lo; x <= hi; ++x)
        for (int y = lo; y <= hi; ++y)
            if ((y <= x && x <= apex) || (apex <= x && x <= y)) out.add(x, y);
    out.close();
    return out;
}

Module bang_tilting(int lo, int hi, int apex) {
    if (apex < lo || apex > hi)
        throw ApexOutOfRange("apex " + std::to_string(apex) + " outside [" + std::to_string(lo) +
                             "," + std::to_string(hi) + "]");
    Module out{{apex, apex}};
    for (int x = lo; x < hi; ++x) out.push_back({x, x + 1});
    return canonicalize(out);
}

int bang_apex_of_tilting(int lo, int hi, const Module& t) {
    int apex = 0;
    for (const Interval& m : t) {
        if (m.length() == 1) {
            if (apex) throw NotTilting("two simple summands over a radical-square-zero block");
            apex = m.top;
        }
    }
    if (!apex) throw NotTilting("no simple summand over a radical-square-zero block");
    if (!(canonicalize(t) == bang_tilting(lo, hi, apex)))
        throw NotTilting("summands are not the projectives plus one simple");
    return apex;
}

PartialOrder order_of_local(const Block& block, const LocalStructure& local) {
    if (block.kind == BlockKind::path) return order_of_tree(local.tree);
    return vshape_order(block.lo, block.hi, local.apex);
}

Module tilting_of_local(const Block& block, const LocalStructure& local) {
    if (block.kind == BlockKind::path) return tilting_of_tree(local.tree);
    return bang_tilting(block.lo, block.hi, local.apex);
}

namespace {

// Validates (A0), (A1), (A2) and returns the local orders.
std::vector<PartialOrder> validate_sequence(const Algebra& a, const AdmissibleSequence& seq) {
    if (!(seq.blocks == block_decomposition(a)))
        throw InadmissibleSequence("block data does not match the algebra");
    size_t count = seq.blocks.blocks.size();
    if (seq.locals.size() != count)
        throw InadmissibleSequence("expected one local structure per block");
    std::vector<PartialOrder> orders;
    for (size_t i = 0; i < count; ++i) {
        const Block& block = seq.blocks.blocks[i];
        const LocalStructure& local = seq.locals[i];
        if (block.kind == BlockKind::path) {
            if (local.tree.lo != block.lo || local.tree.hi != block.hi)
                throw InadmissibleSequence("(A0) tree labels do not match block [" +
                                           std::to_string(block.lo) + "," +
                                           std::to_string(block.hi) + "]");
        } else if (local.apex < block.lo || local.apex > block.hi) {
            throw InadmissibleSequence("(A0) apex " + std::to_string(local.apex) +
                                       " outside block [" + std::to_string(block.lo) + "," +
                                       std::to_string(block.hi) + "]");
        }
        orders.push_back(order_of_local(block, local));
    }
    for (size_t i = 0; i < count; ++i) {
        const Block& block = seq.blocks.blocks[i];
        if (block.kind != BlockKind::bang) continue;
        // Orientation toward the block at both cuts, per the neighbor orders.
        bool left_up = i > 0 && orders[i - 1].lt(block.lo - 1, block.lo);
        bool right_up = i + 1 >= count || orders[i + 1].lt(block.hi, block.hi + 1);
        int apex = seq.locals[i].apex;
        int cases = 0;
        if (left_up && apex == block.lo && right_up) ++cases;            // (i)
        if (!left_up && right_up) ++cases;                               // (ii)
        if (!left_up && apex == block.hi && !right_up) ++cases;          // (iii)
        if (cases != 1)
            throw InadmissibleSequence("(A1) fails at block [" + std::to_string(block.lo) + "," +
                                       std::to_string(block.hi) + "]");
    }
    for (size_t i = 0; i + 1 < count; ++i) {
        if (seq.blocks.blocks[i].kind != BlockKind::path ||
            seq.blocks.blocks[i + 1].kind != BlockKind::path)
            continue;
        int v = seq.blocks.blocks[i].hi;
        if (orders[i].lt(v - 1, v) && !orders[i + 1].lt(v, v + 1))
            throw InadmissibleSequence("(A2) fails at cut " + std::to_string(v));
    }
    return orders;
}

}  // namespace

Assembled admissible_validate_assemble(const Algebra& a, const AdmissibleSequence& seq) {
    std::vector<PartialOrder> orders = validate_sequence(a, seq);
    PartialOrder glued = orders.front();
    for (size_t i = 1; i < orders.size(); ++i) glued = glue_orders(glued, orders[i]);

    // Merge local tiltings: at each cut the simple S(cut) survives only when
    // both sides contain it; a one-sided copy is the restriction of the
    // neighbor's summand through the cut and is absorbed by it.
    Module merged;
    for (size_t i = 0; i < seq.blocks.blocks.size(); ++i) {
        Module local = tilting_of_local(seq.blocks.blocks[i], seq.locals[i]);
        merged.insert(merged.end(), local.begin(), local.end());
    }
    std::sort(merged.begin(), merged.end());
    for (int cut : seq.blocks.cuts) {
        Interval s{cut, cut};
        auto lo_it = std::lower_bound(merged.begin(), merged.end(), s);
        auto hi_it = std::upper_bound(merged.begin(), merged.end(), s);
        long long copies = hi_it - lo_it;
        if (copies == 0)
            throw InternalCheckFailed("no simple at cut " + std::to_string(cut) +
                                      " in an admissible sequence");
        merged.erase(lo_it);  // drop one copy: absorbed or deduplicated
    }
    if (!is_tilting(a, merged))
        throw InternalCheckFailed("assembled module is not tilting");
    for (size_t i = 0; i < seq.blocks.blocks.size(); ++i) {
        const Block& block = seq.blocks.blocks[i];
        Module restricted;
        for (const Interval& m : merged)
            if (auto r = restrict_to_range(m, block.lo, block.hi)) restricted.push_back(*r);
        restricted = canonicalize(restricted);
        for (const Interval& m : tilting_of_local(block, seq.locals[i]))
            if (!module_contains(restricted, m))
                throw InternalCheckFailed("assembled module does not restrict onto block [" +
                                          std::to_string(block.lo) + "," +
                                          std::to_string(block.hi) + "]");
    }
    return {glued, merged};
}

AdmissibleSequence admissible_from_tilting(const Algebra& a, const Module& t) {
    TiltingOrder extraction = order_from_tilting(a, t);
    AdmissibleSequence seq;
    seq.blocks = block_decomposition(a);
    for (const Block& block : seq.blocks.blocks) {
        Module local;
        for (int j = block.lo; j <= block.hi; ++j) {
            auto r = restrict_to_range(extraction.labeled.label[static_cast<size_t>(j - 1)],
                                       block.lo, block.hi);
            if (!r) throw InternalCheckFailed("label restriction vanished on its own block");
            local.push_back(*r);
        }
        local = canonicalize(local);
        if (static_cast<int>(local.size()) != block.hi - block.lo + 1)
            throw InternalCheckFailed("restricted labels collide on block [" +
                                      std::to_string(block.lo) + "," + std::to_string(block.hi) +
                                      "]");
        LocalStructure ls;
        if (block.kind == BlockKind::path)
            ls.tree = tree_of_tilting(block.lo, block.hi, local);
        else
            ls.apex = bang_apex_of_tilting(block.lo, block.hi, local);
        seq.locals.push_back(std::move(ls));
    }
    validate_sequence(a, seq);
    return seq;
}

}  // namespace qln
