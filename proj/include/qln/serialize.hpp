// Serialization: JSON as the machine format, a compact text format for
// humans, DOT for graphs, and the inline algebra syntax "n:l1,l2,...".
// Emission is deterministic byte-for-byte for fixed inputs.

#pragma once

#include <string>

#include <json.hpp>

#include "qln/algebra.hpp"
#include "qln/gluing.hpp"
#include "qln/poset.hpp"
#include "qln/tilting.hpp"

namespace qln {

using json = nlohmann::ordered_json;

json to_json(const Algebra& a);
json to_json(Interval m);
json to_json(const Module& m);
json to_json(const PartialOrder& order);
json to_json(const BinaryTree& tree);
json to_json(const BlockDecomposition& dec);
json to_json(const AdmissibleSequence& seq);
json to_json(const TiltPoset& poset);

Algebra algebra_from_json(const json& j);
Interval interval_from_json(const json& j);
Module module_from_json(const json& j);
PartialOrder order_from_json(const json& j);
BinaryTree tree_from_json(const json& j);
AdmissibleSequence sequence_from_json(const json& j, const Algebra& a);

// Inline algebra syntax: "n:l1,l2,..." (the relation list may be empty).
Algebra parse_inline_algebra(const std::string& spec);

std::string to_text(const Algebra& a);
std::string to_text(const Module& m);
std::string to_text(const PartialOrder& order);   // sorted cover pairs "g>l"
std::string to_text(const BinaryTree& tree);      // nested parentheses
std::string to_text(const BlockDecomposition& dec);

// Hasse arrows point from greater to lesser.
std::string emit_dot(const PartialOrder& order);
// One node per tilting module, one edge per irreducible left mutation
// labeled by the mutated summand.
std::string emit_dot(const TiltPoset& poset);

}  // namespace qln
