#include "qln/serialize.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qln {

json to_json(const Algebra& a) {
    return json{{"vertices", a.vertices()}, {"relations", a.relations()}};
}

json to_json(Interval m) { return json::array({m.top, m.socle}); }

json to_json(const Module& m) {
    json out = json::array();
    for (const Interval& x : m) out.push_back(to_json(x));
    return out;
}

json to_json(const PartialOrder& order) {
    json covers = json::array();
    for (auto [g, l] : order.covers()) covers.push_back(json::array({g, l}));
    if (order.lo() == 1) return json{{"n", order.hi()}, {"covers", covers}};
    return json{{"range", json::array({order.lo(), order.hi()})}, {"covers", covers}};
}

namespace {

json tree_node_json(const BinaryTree& tree, int v) {
    json out{{"label", v}};
    if (int l = tree.left_child(v)) out["left"] = tree_node_json(tree, l);
    if (int r = tree.right_child(v)) out["right"] = tree_node_json(tree, r);
    return out;
}

}  // namespace

json to_json(const BinaryTree& tree) { return tree_node_json(tree, tree.root); }

json to_json(const BlockDecomposition& dec) {
    json blocks = json::array();
    for (const Block& b : dec.blocks)
        blocks.push_back(json{{"kind", b.kind == BlockKind::path ? "path" : "bang"},
                              {"range", json::array({b.lo, b.hi})}});
    return json{{"blocks", blocks}, {"cuts", dec.cuts}};
}

json to_json(const AdmissibleSequence& seq) {
    json out = json::array();
    for (size_t i = 0; i < seq.blocks.blocks.size(); ++i) {
        const Block& b = seq.blocks.blocks[i];
        json entry{{"kind", b.kind == BlockKind::path ? "path" : "bang"},
                   {"range", json::array({b.lo, b.hi})}};
        if (b.kind == BlockKind::path)
            entry["tree"] = to_json(seq.locals[i].tree);
        else
            entry["apex"] = seq.locals[i].apex;
        out.push_back(entry);
    }
    return out;
}

json to_json(const TiltPoset& poset) {
    json nodes = json::array();
    for (const Module& t : poset.elements) nodes.push_back(to_json(t));
    json edges = json::array();
    for (const auto& e : poset.edges)
        edges.push_back(json::array({e.source, e.target, to_json(e.mutated)}));
    return json{{"nodes", nodes}, {"edges", edges}, {"maximum", poset.maximum}};
}

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

int as_int(const json& j, const std::string& ctx) {
    if (!j.is_number_integer()) bad(ctx + ": expected an integer");
    return j.get<int>();
}

}  // namespace

Algebra algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices")) bad("algebra: expected {vertices, relations}");
    std::vector<int> rel;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) rel.push_back(as_int(r, "relation"));
    return make_algebra(as_int(j.at("vertices"), "vertices"), rel);
}

Interval interval_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) bad("interval: expected [top, socle]");
    return {as_int(j[0], "interval"), as_int(j[1], "interval")};
}

Module module_from_json(const json& j) {
    if (!j.is_array()) bad("module: expected an array of intervals");
    Module out;
    for (const auto& x : j) out.push_back(interval_from_json(x));
    return canonicalize(out);
}

PartialOrder order_from_json(const json& j) {
    if (!j.is_object()) bad("order: expected {n|range, covers}");
    int lo = 1, hi = 0;
    if (j.contains("range")) {
        const auto& r = j.at("range");
        if (!r.is_array() || r.size() != 2) bad("order: range must be [lo, hi]");
        lo = as_int(r[0], "range");
        hi = as_int(r[1], "range");
    } else if (j.contains("n")) {
        hi = as_int(j.at("n"), "n");
    } else {
        bad("order: expected n or range");
    }
    std::vector<std::pair<int, int>> covers;
    if (j.contains("covers"))
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) bad("order: cover must be [greater, lesser]");
            covers.emplace_back(as_int(c[0], "cover"), as_int(c[1], "cover"));
        }
    return PartialOrder::from_covers(lo, hi, covers);
}

namespace {

struct TreeReader {
    std::vector<int> labels;
    std::vector<std::array<int, 2>> children;  // parallel to labels

    int read(const json& j) {
        if (!j.is_object() || !j.contains("label")) bad("tree: expected {label, left?, right?}");
        int v = as_int(j.at("label"), "tree label");
        int l = j.contains("left") ? read(j.at("left")) : 0;
        int r = j.contains("right") ? read(j.at("right")) : 0;
        labels.push_back(v);
        children.push_back({l, r});
        return v;
    }
};

}  // namespace

BinaryTree tree_from_json(const json& j) {
    TreeReader reader;
    int root = reader.read(j);
    int lo = *std::min_element(reader.labels.begin(), reader.labels.end());
    int hi = *std::max_element(reader.labels.begin(), reader.labels.end());
    size_t size = static_cast<size_t>(hi - lo + 1);
    if (reader.labels.size() != size) throw NotATree("labels are not a contiguous window");
    std::vector<int> left(size, 0), right(size, 0);
    std::vector<char> seen(size, 0);
    for (size_t i = 0; i < reader.labels.size(); ++i) {
        size_t at = static_cast<size_t>(reader.labels[i] - lo);
        if (seen[at]) throw NotATree("duplicate label " + std::to_string(reader.labels[i]));
        seen[at] = 1;
        left[at] = reader.children[i][0];
        right[at] = reader.children[i][1];
    }
    return make_binary_tree(lo, hi, root, std::move(left), std::move(right));
}

AdmissibleSequence sequence_from_json(const json& j, const Algebra& a) {
    if (!j.is_array()) bad("sequence: expected an array of block entries");
    AdmissibleSequence seq;
    seq.blocks = block_decomposition(a);
    if (j.size() != seq.blocks.blocks.size())
        bad("sequence: expected " + std::to_string(seq.blocks.blocks.size()) + " entries");
    for (size_t i = 0; i < j.size(); ++i) {
        const json& entry = j[i];
        const Block& block = seq.blocks.blocks[i];
        if (!entry.is_object()) bad("sequence: entry must be an object");
        std::string kind = entry.value("kind", "");
        std::string want = block.kind == BlockKind::path ? "path" : "bang";
        if (kind != want) bad("sequence: entry " + std::to_string(i) + " must have kind " + want);
        LocalStructure local;
        if (block.kind == BlockKind::path) {
            if (!entry.contains("tree")) bad("sequence: path entry needs a tree");
            local.tree = tree_from_json(entry.at("tree"));
        } else {
            if (!entry.contains("apex")) bad("sequence: bang entry needs an apex");
            local.apex = as_int(entry.at("apex"), "apex");
        }
        seq.locals.push_back(std::move(local));
    }
    return seq;
}

Algebra parse_inline_algebra(const std::string& spec) {
    std::string head = spec, tail;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        head = spec.substr(0, colon);
        tail = spec.substr(colon + 1);
    }
    auto parse_int = [](const std::string& s) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            bad("inline algebra: bad integer '" + s + "'");
        }
        if (used != s.size()) bad("inline algebra: bad integer '" + s + "'");
        return v;
    };
    int n = parse_int(head);
    std::vector<int> rel;
    std::stringstream ss(tail);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) rel.push_back(parse_int(item));
    return make_algebra(n, rel);
}

std::string to_text(const Algebra& a) {
    std::string out = std::to_string(a.vertices()) + ":";
    for (size_t i = 0; i < a.relations().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(a.relations()[i]);
    }
    return out;
}

std::string to_text(const Module& m) {
    std::string out;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) out += " ";
        out += to_string(m[i]);
    }
    return out;
}

std::string to_text(const PartialOrder& order) {
    auto covers = order.covers();
    if (covers.empty()) return "trivial";
    std::string out;
    for (size_t i = 0; i < covers.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(covers[i].first) + ">" + std::to_string(covers[i].second);
    }
    return out;
}

namespace {

std::string tree_node_text(const BinaryTree& tree, int v) {
    std::string out = "(" + std::to_string(v);
    if (int l = tree.left_child(v)) out += " " + tree_node_text(tree, l);
    if (int r = tree.right_child(v)) out += " " + tree_node_text(tree, r);
    return out + ")";
}

}  // namespace

std::string to_text(const BinaryTree& tree) { return tree_node_text(tree, tree.root); }

std::string to_text(const BlockDecomposition& dec) {
    std::string out;
    for (size_t i = 0; i < dec.blocks.size(); ++i) {
        if (i) out += " | ";
        const Block& b = dec.blocks[i];
        out += (b.kind == BlockKind::path ? "path" : "bang");
        out += " [" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]";
    }
    return out;
}

std::string emit_dot(const PartialOrder& order) {
    std::string out = "digraph order {\n";
    for (int v = order.lo(); v <= order.hi(); ++v)
        out += "  v" + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"];\n";
    for (auto [g, l] : order.covers())
        out += "  v" + std::to_string(g) + " -> v" + std::to_string(l) + ";\n";
    return out + "}\n";
}

std::string emit_dot(const TiltPoset& poset) {
    std::string out = "digraph tilt {\n";
    for (size_t i = 0; i < poset.elements.size(); ++i)
        out += "  t" + std::to_string(i) + " [label=\"" + to_text(poset.elements[i]) + "\"];\n";
    for (const auto& e : poset.edges)
        out += "  t" + std::to_string(e.source) + " -> t" + std::to_string(e.target) +
               " [label=\"" + to_string(e.mutated) + "\"];\n";
    return out + "}\n";
}

}  // namespace qln
