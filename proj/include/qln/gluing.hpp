// Block decomposition at nodes, order gluing with the boundary-compatibility
// conditions, the binary-tree and V-shaped-order dictionaries for path and
// radical-square-zero blocks, and admissible sequences.

#pragma once

#include <utility>
#include <vector>

#include "qln/algebra.hpp"
#include "qln/poset.hpp"

namespace qln {

enum class BlockKind { path, bang };

struct Block {
    BlockKind kind;
    int lo;
    int hi;
    friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // consecutive blocks share exactly one cut vertex
    std::vector<int> cuts;
    friend bool operator==(const BlockDecomposition&, const BlockDecomposition&) = default;
};

// Runs of consecutive relation vertices: a run of length >= 2 spanning [p,q]
// yields cuts at p and q with a bang block [p,q]; a singleton run yields a
// single cut; the complementary stretches are path blocks.
BlockDecomposition block_decomposition(const Algebra& a);

// A binary tree whose nodes are labeled by in-order traversal, so the label
// set is exactly the window [lo, hi] and each node stores its child labels.
struct BinaryTree {
    int lo = 1;
    int hi = 0;
    int root = 0;
    std::vector<int> left;   // by label - lo, 0 = absent
    std::vector<int> right;

    int left_child(int v) const { return left[static_cast<size_t>(v - lo)]; }
    int right_child(int v) const { return right[static_cast<size_t>(v - lo)]; }
    // Inclusive label window of the subtree rooted at v.
    std::pair<int, int> span(int v) const;

    friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
};

// Validates the in-order labeling; throws NotATree.
BinaryTree make_binary_tree(int lo, int hi, int root, std::vector<int> left,
                            std::vector<int> right);

// Gluing of two orders overlapping in exactly one vertex: the transitive
// closure of the union.
PartialOrder glue_orders(const PartialOrder& a, const PartialOrder& b);

struct GluingCheck {
    bool delta_ok;
    bool nabla_ok;
};

// Chain form of the gluing conditions at the node v: (delta) v-1 < v on the
// left forces v < v+1 on the right, (nabla) dually.
GluingCheck gluing_conditions(const PartialOrder& left, const PartialOrder& right, int v);

PartialOrder restrict_order(const PartialOrder& order, int s, int t);

// Dictionary between binary trees and minimal adapted orders of a path block:
// covers read parent over child.
PartialOrder order_of_tree(const BinaryTree& tree);
BinaryTree tree_of_order(const PartialOrder& order);

// Dictionary between binary trees and tilting modules of a path block:
// T(j) is the interval of in-order labels of the subtree at j.
Module tilting_of_tree(const BinaryTree& tree);
BinaryTree tree_of_tilting(int lo, int hi, const Module& t);

// Dictionary for a radical-square-zero block [lo, hi] keyed by the apex, the
// unique minimum of the V-shaped order and vertex of the simple summand.
PartialOrder vshape_order(int lo, int hi, int apex);
Module bang_tilting(int lo, int hi, int apex);
int bang_apex_of_tilting(int lo, int hi, const Module& t);

struct LocalStructure {
    BinaryTree tree;  // meaningful for path blocks
    int apex = 0;     // meaningful for bang blocks
};

struct AdmissibleSequence {
    BlockDecomposition blocks;
    std::vector<LocalStructure> locals;
};

PartialOrder order_of_local(const Block& block, const LocalStructure& local);
Module tilting_of_local(const Block& block, const LocalStructure& local);

struct Assembled {
    PartialOrder order;
    Module tilting;
};

// Validates the sequence conditions and assembles the global minimal adapted
// order (by iterated gluing) and the global tilting module (cut simples are
// absorbed by the summand they restrict from).  Throws InadmissibleSequence
// naming the violated clause.
Assembled admissible_validate_assemble(const Algebra& a, const AdmissibleSequence& seq);

// Per-block restriction of a tilting module along its elimination labeling,
// converted to local structures.
AdmissibleSequence admissible_from_tilting(const Algebra& a, const Module& t);

}  // namespace qln
