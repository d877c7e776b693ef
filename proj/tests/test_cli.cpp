#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qln/cli.hpp"
#include "qln/serialize.hpp"

using namespace qln;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("counting verbs print plain numbers") {
    Run r = cli({"qhs", "count", "--inline", "10:5,6,7,9"});
    CHECK(r.code == 0);
    CHECK(r.out == "266\n");

    r = cli({"tilt", "count", "--inline", "8:"});
    CHECK(r.code == 0);
    CHECK(r.out == "1430\n");

    r = cli({"tilt", "count", "--inline", "3:2", "--strategy", "mutation"});
    CHECK(r.out == "3\n");

    r = cli({"tilt", "count", "--inline", "10:5,6,7,9", "--format", "csv"});
    CHECK(r.out == "n,relations,tilt_count,qhs_count\n10,5 6 7 9,266,266\n");
}

TEST_CASE("hasse emits dot") {
    Run r = cli({"tilt", "hasse", "--inline", "3:2", "--format", "dot"});
    CHECK(r.code == 0);
    CHECK(r.out.find("digraph tilt {") == 0);
    // 3 nodes and 2 labeled edges
    CHECK(r.out.find("t0") != std::string::npos);
    CHECK(r.out.find("t2") != std::string::npos);
    size_t edges = 0;
    for (size_t at = r.out.find("->"); at != std::string::npos; at = r.out.find("->", at + 1))
        ++edges;
    CHECK(edges == 2);
}

TEST_CASE("trees verbs speak JSON by default") {
    Run r = cli({"trees", "of-tilting", "--inline", "5:", "--modules",
                 "[[1,1],[1,3],[3,3],[1,5],[5,5]]"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          R"({"label":4,"left":{"label":2,"left":{"label":1},"right":{"label":3}},"right":{"label":5}})"
          "\n");

    Run back = cli({"trees", "to-tilting", "--inline", "5:", "--tree",
                    R"({"label":4,"left":{"label":2,"left":{"label":1},"right":{"label":3}},"right":{"label":5}})"});
    CHECK(back.code == 0);
    CHECK(back.out == "[[1,1],[1,3],[1,5],[3,3],[5,5]]\n");

    Run bad = cli({"trees", "of-tilting", "--inline", "5:3", "--modules", "[[1,1]]"});
    CHECK(bad.code == 2);  // trees need a relation-free algebra
}

TEST_CASE("qhs of-tilting and chtilt invert each other") {
    Run r = cli({"qhs", "of-tilting", "--inline", "3:2", "--modules", "[[1,2],[2,3],[3,3]]",
                 "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == json::parse(R"({"n":3,"covers":[[1,2],[2,3]]})"));

    Run back = cli({"qhs", "chtilt", "--inline", "3:2", "--order", j["order"].dump(), "--format",
                    "json"});
    CHECK(back.code == 0);
    json b = json::parse(back.out);
    CHECK(b["modules"] == json::parse("[[1,2],[2,3],[3,3]]"));
}

TEST_CASE("blocks and decompose") {
    Run r = cli({"blocks", "--inline", "10:5,6,7,9"});
    CHECK(r.out == "path [1,5] | bang [5,7] | path [7,9] | path [9,10]\n");

    r = cli({"decompose", "--inline", "3:2"});
    CHECK(r.out == "2 2\n3 1\n");

    r = cli({"decompose", "--inline", "3:", "--modules", "[[1,3],[2,3],[2,2]]"});
    CHECK(r.out == "2\n");
}

TEST_CASE("glue combines orders") {
    Run r = cli({"glue", "--order", R"({"range":[1,2],"covers":[[1,2]]})", "--order",
                 R"({"range":[2,3],"covers":[[2,3]]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "1>2 2>3\n");

    r = cli({"glue", "--inline", "3:2", "--sequence",
             R"([{"kind":"path","range":[1,2],"tree":{"label":2,"left":{"label":1}}},)"
             R"({"kind":"path","range":[2,3],"tree":{"label":3,"left":{"label":2}}}])"});
    CHECK(r.code == 0);
    CHECK(r.out == "order: 2>1 3>2\nmodules: [1,1] [1,2] [2,3]\n");
}

TEST_CASE("exit codes distinguish usage and domain errors") {
    CHECK(cli({"tilt", "count", "--inline", "3:7"}).code == 1);   // relation out of range
    CHECK(cli({"tilt", "count"}).code == 2);                      // missing algebra
    CHECK(cli({"unknown-verb"}).code == 2);
    CHECK(cli({"tilt", "count", "--inline", "abc"}).code == 2);   // unparseable spec
    CHECK(cli({"tilt", "mutate", "--inline", "3:", "--modules", "[[1,1],[2,2],[3,3]]"}).code == 1);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("serialization round trips") {
    // algebra
    for (const char* spec : {"1:", "3:2", "10:5,6,7,9"}) {
        Algebra a = parse_inline_algebra(spec);
        CHECK(algebra_from_json(to_json(a)) == a);
        CHECK(parse_inline_algebra(to_text(a)) == a);
    }
    // modules
    Module m{{1, 2}, {2, 3}, {3, 3}};
    CHECK(module_from_json(to_json(m)) == m);
    // orders, including window-based ones
    PartialOrder o = PartialOrder::from_covers(1, 3, {{1, 2}, {3, 2}});
    CHECK(order_from_json(to_json(o)) == o);
    PartialOrder w = PartialOrder::from_covers(5, 7, {{5, 6}, {7, 6}});
    CHECK(order_from_json(to_json(w)) == w);
    // trees
    BinaryTree tree = tree_from_json(json::parse(
        R"({"label":4,"left":{"label":2,"left":{"label":1},"right":{"label":3}},"right":{"label":5}})"));
    CHECK(tree_from_json(to_json(tree)) == tree);
    // admissible sequences
    Algebra big = parse_inline_algebra("10:5,6,7,9");
    Module t{{1, 1}, {1, 3}, {1, 5}, {3, 3}, {5, 6}, {6, 6}, {6, 7}, {7, 9}, {9, 10}, {10, 10}};
    AdmissibleSequence seq = admissible_from_tilting(big, t);
    json round = to_json(sequence_from_json(to_json(seq), big));
    CHECK(round == to_json(seq));
}

TEST_CASE("dot output for orders follows the greater-to-lesser convention") {
    std::string dot = emit_dot(PartialOrder::chain({3, 2, 1}));
    CHECK(dot.find("v1 -> v2") != std::string::npos);
    CHECK(dot.find("v2 -> v3") != std::string::npos);
    CHECK(dot.find("v2 -> v1") == std::string::npos);

    std::string trivial = emit_dot(PartialOrder(1, 1));
    CHECK(trivial.find("->") == std::string::npos);
    CHECK(trivial.find("v1") != std::string::npos);
}
