#include "qln/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qln/counting.hpp"
#include "qln/gluing.hpp"
#include "qln/qhs.hpp"
#include "qln/serialize.hpp"
#include "qln/tilting.hpp"
#include "qln/verify.hpp"

namespace qln {

namespace {

struct AlgebraInput {
    std::string file;
    std::string inline_spec;

    void attach(CLI::App* cmd) {
        cmd->add_option("--algebra", file, "algebra JSON file {vertices, relations}");
        cmd->add_option("--inline", inline_spec, "inline algebra spec n:l1,l2,...");
    }

    Algebra load() const {
        if (!inline_spec.empty()) return parse_inline_algebra(inline_spec);
        if (!file.empty()) {
            std::ifstream in(file);
            if (!in) throw ParseError("cannot open algebra file " + file);
            json j = json::parse(in, nullptr, true, true);
            return algebra_from_json(j);
        }
        throw CLI::RequiredError("--algebra or --inline");
    }
};

json parse_json_arg(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(what + ": " + e.what());
    }
}

void print_labels(std::ostream& out, const LabeledTilting& labeled) {
    for (size_t i = 0; i < labeled.label.size(); ++i)
        out << "T(" << i + 1 << ") = " << to_string(labeled.label[i]) << "\n";
}

json labels_json(const LabeledTilting& labeled) {
    json out = json::array();
    for (size_t i = 0; i < labeled.label.size(); ++i)
        out.push_back(json::array({static_cast<int>(i + 1), to_json(labeled.label[i])}));
    return out;
}

void emit_count(std::ostream& out, const Algebra& a, const std::string& format, long long count) {
    if (format == "json") {
        out << json{{"count", count}}.dump() << "\n";
    } else if (format == "csv") {
        out << "n,relations,tilt_count,qhs_count\n" << a.vertices() << ",";
        for (size_t i = 0; i < a.relations().size(); ++i)
            out << (i ? " " : "") << a.relations()[i];
        out << "," << count << "," << count << "\n";
    } else {
        out << count << "\n";
    }
}

// Seeded smoke test behind `verify --seed`: random downward mutation walks on
// a few mid-size algebras, checking cardinality and strict descent.
bool sampled_mutation_walks(int max_n, unsigned seed, std::ostream& out) {
    std::mt19937 rng(seed);
    int lo = 6, hi = std::max(6, std::min(10, max_n));
    for (int trial = 0; trial < 12; ++trial) {
        int n = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
        std::vector<int> rel;
        for (int l = 2; l <= n - 1; ++l)
            if (rng() % 3 == 0) rel.push_back(l);
        Algebra a = make_algebra(n, rel);
        Module t;
        for (int i = 1; i <= n; ++i) t.push_back(projective(a, i));
        t = canonicalize(t);
        ExtTable table(a);
        for (int step = 0; step < 32; ++step) {
            Module mutable_at;
            for (const Interval& x : t)
                if (left_mutation(table, t, x)) mutable_at.push_back(x);
            if (mutable_at.empty()) break;  // reached the minimum
            Interval x = mutable_at[rng() % mutable_at.size()];
            Module next = *left_mutation(table, t, x);
            if (next.size() != t.size() || !is_tilting(a, next) || !tilt_geq(a, t, next) ||
                tilt_geq(a, next, t)) {
                out << "sampled mutation walks: FAIL on " << to_text(a) << " at "
                    << to_string(x) << "\n";
                return false;
            }
            t = next;
        }
    }
    out << "sampled mutation walks: OK (seed " << seed << ")\n";
    return true;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact tilting/quasi-hereditary engine for quadratic linear Nakayama algebras"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string format = "text";
    auto attach_format = [&](CLI::App* cmd, const std::string& def = "text") {
        cmd->add_option_function<std::string>(
               "--format", [&format](const std::string& v) { format = v; },
               "output format: text|json|dot|csv")
            ->check(CLI::IsMember({"text", "json", "dot", "csv"}))
            ->default_str(def);
        cmd->preparse_callback([&format, def](size_t) { format = def; });
    };

    // ---- indecs ----------------------------------------------------------
    AlgebraInput indecs_alg;
    auto* indecs = app.add_subcommand("indecs", "list the indecomposable modules");
    indecs_alg.attach(indecs);
    attach_format(indecs);
    indecs->callback([&] {
        Algebra a = indecs_alg.load();
        Module all = indecomposables(a);
        if (format == "json")
            out << to_json(all).dump() << "\n";
        else
            out << to_text(all) << "\n";
    });

    // ---- tilt ------------------------------------------------------------
    auto* tilt = app.add_subcommand("tilt", "tilting modules");
    tilt->require_subcommand(1);
    AlgebraInput tilt_alg;
    std::string tilt_strategy = "mutation";
    std::string tilt_modules;

    auto* tilt_list = tilt->add_subcommand("list", "enumerate tilting modules");
    tilt_alg.attach(tilt_list);
    attach_format(tilt_list);
    tilt_list->add_option("--strategy", tilt_strategy, "mutation|exhaustive")
        ->check(CLI::IsMember({"mutation", "exhaustive"}));
    tilt_list->callback([&] {
        Algebra a = tilt_alg.load();
        auto strategy = tilt_strategy == "exhaustive" ? EnumStrategy::exhaustive
                                                      : EnumStrategy::mutation;
        std::vector<Module> all = enumerate_tilting(a, strategy);
        if (format == "json") {
            json j = json::array();
            for (const Module& t : all) j.push_back(to_json(t));
            out << j.dump() << "\n";
        } else {
            for (const Module& t : all) out << to_text(t) << "\n";
        }
    });

    auto* tilt_count = tilt->add_subcommand("count", "count tilting modules");
    tilt_alg.attach(tilt_count);
    attach_format(tilt_count);
    tilt_count->add_option("--strategy", tilt_strategy, "recursive|mutation|exhaustive")
        ->check(CLI::IsMember({"recursive", "mutation", "exhaustive"}));
    tilt_count->preparse_callback([&tilt_strategy](size_t) { tilt_strategy = "recursive"; });
    tilt_count->callback([&] {
        Algebra a = tilt_alg.load();
        long long count = 0;
        if (tilt_strategy == "recursive")
            count = count_tilt_recursive(a);
        else
            count = static_cast<long long>(
                enumerate_tilting(a, tilt_strategy == "exhaustive" ? EnumStrategy::exhaustive
                                                                   : EnumStrategy::mutation)
                    .size());
        emit_count(out, a, format, count);
    });

    auto* tilt_hasse_cmd = tilt->add_subcommand("hasse", "mutation quiver of the tilting order");
    tilt_alg.attach(tilt_hasse_cmd);
    attach_format(tilt_hasse_cmd);
    tilt_hasse_cmd->callback([&] {
        Algebra a = tilt_alg.load();
        TiltPoset poset = tilt_hasse(a);
        if (format == "dot") {
            out << emit_dot(poset);
        } else if (format == "json") {
            out << to_json(poset).dump() << "\n";
        } else {
            for (size_t i = 0; i < poset.elements.size(); ++i)
                out << i << ": " << to_text(poset.elements[i]) << "\n";
            for (const auto& e : poset.edges)
                out << e.source << " -> " << e.target << " at " << to_string(e.mutated) << "\n";
        }
    });

    auto* tilt_mutate = tilt->add_subcommand("mutate", "all left mutations of a tilting module");
    tilt_alg.attach(tilt_mutate);
    attach_format(tilt_mutate);
    tilt_mutate->add_option("--modules", tilt_modules, "tilting module as a JSON interval list")
        ->required();
    tilt_mutate->callback([&] {
        Algebra a = tilt_alg.load();
        Module t = module_from_json(parse_json_arg(tilt_modules, "--modules"));
        if (!is_tilting(a, t)) throw NotTilting("input is not a basic tilting module");
        json rows = json::array();
        for (const Interval& x : t) {
            auto next = left_mutation(a, t, x);
            if (format == "json") {
                rows.push_back(json{{"summand", to_json(x)},
                                    {"result", next ? to_json(*next) : json(nullptr)}});
            } else if (next) {
                out << to_string(x) << " -> " << to_text(*next) << "\n";
            } else {
                out << to_string(x) << " not mutable\n";
            }
        }
        if (format == "json") out << rows.dump() << "\n";
    });

    // ---- qhs -------------------------------------------------------------
    auto* qhs = app.add_subcommand("qhs", "quasi-hereditary structures");
    qhs->require_subcommand(1);
    AlgebraInput qhs_alg;
    std::string qhs_modules, qhs_order;

    auto* qhs_list = qhs->add_subcommand("list", "minimal adapted orders via the bijection");
    qhs_alg.attach(qhs_list);
    attach_format(qhs_list);
    qhs_list->callback([&] {
        Algebra a = qhs_alg.load();
        std::vector<PartialOrder> orders = enumerate_qhs(a, QhsStrategy::via_tilting);
        if (format == "json") {
            json j = json::array();
            for (const PartialOrder& o : orders) j.push_back(to_json(o));
            out << j.dump() << "\n";
        } else {
            for (const PartialOrder& o : orders) out << to_text(o) << "\n";
        }
    });

    auto* qhs_count = qhs->add_subcommand("count", "count quasi-hereditary structures");
    qhs_alg.attach(qhs_count);
    attach_format(qhs_count);
    qhs_count->callback([&] {
        Algebra a = qhs_alg.load();
        emit_count(out, a, format, count_tilt_recursive(a));
    });

    auto* qhs_oft = qhs->add_subcommand("of-tilting", "extract the structure of a tilting module");
    qhs_alg.attach(qhs_oft);
    attach_format(qhs_oft);
    qhs_oft->add_option("--modules", qhs_modules, "tilting module as a JSON interval list")
        ->required();
    qhs_oft->callback([&] {
        Algebra a = qhs_alg.load();
        Module t = module_from_json(parse_json_arg(qhs_modules, "--modules"));
        TiltingOrder ext = order_from_tilting(a, t);
        if (format == "json") {
            out << json{{"order", to_json(ext.order)}, {"labels", labels_json(ext.labeled)}}.dump()
                << "\n";
        } else if (format == "dot") {
            out << emit_dot(ext.order);
        } else {
            out << "order: " << to_text(ext.order) << "\n";
            print_labels(out, ext.labeled);
        }
    });

    auto* qhs_cht = qhs->add_subcommand("chtilt", "characteristic tilting module of an order");
    qhs_alg.attach(qhs_cht);
    attach_format(qhs_cht);
    qhs_cht->add_option("--order", qhs_order, "partial order as JSON {n, covers}")->required();
    qhs_cht->callback([&] {
        Algebra a = qhs_alg.load();
        PartialOrder o = order_from_json(parse_json_arg(qhs_order, "--order"));
        LabeledTilting t = char_tilting(a, o);
        if (format == "json") {
            out << json{{"modules", to_json(t.summands)}, {"labels", labels_json(t)}}.dump()
                << "\n";
        } else {
            out << to_text(t.summands) << "\n";
            print_labels(out, t);
        }
    });

    auto* qhs_oracle = qhs->add_subcommand("oracle", "structures by the total-order sweep");
    qhs_alg.attach(qhs_oracle);
    attach_format(qhs_oracle);
    qhs_oracle->callback([&] {
        Algebra a = qhs_alg.load();
        std::vector<PartialOrder> orders = enumerate_qhs(a, QhsStrategy::total_order_oracle);
        if (format == "json") {
            json j = json::array();
            for (const PartialOrder& o : orders) j.push_back(to_json(o));
            out << j.dump() << "\n";
        } else {
            for (const PartialOrder& o : orders) out << to_text(o) << "\n";
        }
    });

    // ---- blocks ----------------------------------------------------------
    AlgebraInput blocks_alg;
    auto* blocks = app.add_subcommand("blocks", "block decomposition at the nodes");
    blocks_alg.attach(blocks);
    attach_format(blocks);
    blocks->callback([&] {
        Algebra a = blocks_alg.load();
        BlockDecomposition dec = block_decomposition(a);
        if (format == "json")
            out << to_json(dec).dump() << "\n";
        else
            out << to_text(dec) << "\n";
    });

    // ---- trees -----------------------------------------------------------
    auto* trees = app.add_subcommand("trees", "binary-tree dictionary for path algebras");
    trees->require_subcommand(1);
    AlgebraInput trees_alg;
    std::string trees_modules, trees_tree;

    auto* trees_oft = trees->add_subcommand("of-tilting", "tree of a path-algebra tilting module");
    trees_alg.attach(trees_oft);
    attach_format(trees_oft, "json");
    trees_oft->add_option("--modules", trees_modules, "tilting module as a JSON interval list")
        ->required();
    trees_oft->callback([&] {
        Algebra a = trees_alg.load();
        if (!a.relations().empty())
            throw CLI::ValidationError("trees", "tree dictionaries require a relation-free algebra");
        Module t = module_from_json(parse_json_arg(trees_modules, "--modules"));
        BinaryTree tree = tree_of_tilting(1, a.vertices(), t);
        if (format == "text")
            out << to_text(tree) << "\n";
        else
            out << to_json(tree).dump() << "\n";
    });

    auto* trees_tot = trees->add_subcommand("to-tilting", "tilting module of a labeled tree");
    trees_alg.attach(trees_tot);
    attach_format(trees_tot, "json");
    trees_tot->add_option("--tree", trees_tree, "binary tree as JSON {label, left?, right?}")
        ->required();
    trees_tot->callback([&] {
        Algebra a = trees_alg.load();
        if (!a.relations().empty())
            throw CLI::ValidationError("trees", "tree dictionaries require a relation-free algebra");
        BinaryTree tree = tree_from_json(parse_json_arg(trees_tree, "--tree"));
        if (tree.lo != 1 || tree.hi != a.vertices())
            throw NotATree("tree labels do not match the algebra vertices");
        Module t = tilting_of_tree(tree);
        if (format == "text")
            out << to_text(t) << "\n";
        else
            out << to_json(t).dump() << "\n";
    });

    // ---- decompose -------------------------------------------------------
    AlgebraInput dec_alg;
    std::string dec_modules;
    auto* decompose = app.add_subcommand("decompose", "cell of the tilting-set decomposition");
    dec_alg.attach(decompose);
    attach_format(decompose);
    decompose->add_option("--modules", dec_modules,
                          "tilting module as a JSON interval list (omit for the fiber table)");
    decompose->callback([&] {
        Algebra a = dec_alg.load();
        if (!dec_modules.empty()) {
            Module t = module_from_json(parse_json_arg(dec_modules, "--modules"));
            int i = classify_decomposition(a, t);
            if (format == "json")
                out << json{{"index", i}}.dump() << "\n";
            else
                out << i << "\n";
        } else {
            std::map<int, long long> fibers;
            for (const Module& t : enumerate_tilting(a, EnumStrategy::mutation))
                ++fibers[classify_decomposition(a, t)];
            if (format == "json") {
                json j = json::array();
                for (auto [i, c] : fibers) j.push_back(json::array({i, c}));
                out << j.dump() << "\n";
            } else {
                for (auto [i, c] : fibers) out << i << " " << c << "\n";
            }
        }
    });

    // ---- glue ------------------------------------------------------------
    AlgebraInput glue_alg;
    std::vector<std::string> glue_orders_arg;
    std::string glue_sequence;
    auto* glue = app.add_subcommand("glue", "glue orders or assemble an admissible sequence");
    glue_alg.attach(glue);
    attach_format(glue);
    glue->add_option("--order", glue_orders_arg,
                     "order as JSON {range, covers}; repeat to glue left to right");
    glue->add_option("--sequence", glue_sequence, "admissible sequence as JSON");
    glue->callback([&] {
        if (!glue_sequence.empty()) {
            Algebra a = glue_alg.load();
            AdmissibleSequence seq = sequence_from_json(parse_json_arg(glue_sequence, "--sequence"), a);
            Assembled result = admissible_validate_assemble(a, seq);
            if (format == "json")
                out << json{{"order", to_json(result.order)}, {"modules", to_json(result.tilting)}}
                           .dump()
                    << "\n";
            else
                out << "order: " << to_text(result.order) << "\n"
                    << "modules: " << to_text(result.tilting) << "\n";
            return;
        }
        if (glue_orders_arg.size() < 2)
            throw CLI::RequiredError("--sequence or at least two --order");
        PartialOrder glued = order_from_json(parse_json_arg(glue_orders_arg[0], "--order"));
        for (size_t i = 1; i < glue_orders_arg.size(); ++i)
            glued = glue_orders(glued, order_from_json(parse_json_arg(glue_orders_arg[i], "--order")));
        if (format == "json")
            out << to_json(glued).dump() << "\n";
        else if (format == "dot")
            out << emit_dot(glued);
        else
            out << to_text(glued) << "\n";
    });

    // ---- verify ----------------------------------------------------------
    int verify_max_n = 7;
    unsigned verify_seed = 0;
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--max-n", verify_max_n, "bound every criterion by this vertex count")
        ->check(CLI::Range(1, 10));
    verify->add_option("--seed", verify_seed, "seed for the sampled mutation walks");
    verify->callback([&] {
        std::vector<CriterionResult> results = run_acceptance(verify_max_n, &out);
        bool ok = all_passed(results);
        if (!sampled_mutation_walks(verify_max_n, verify_seed, out)) ok = false;
        out << (ok ? "all criteria passed\n" : "FAILURES above\n");
        if (!ok) exit_code = 1;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qln");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qln
