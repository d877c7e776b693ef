// Acceptance suite: runs every criterion at its stated bound and prints one
// pass/fail line per criterion.  Exits nonzero when anything fails.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qln/verify.hpp"

namespace {

// The stored fixture files must stay byte-identical to the embedded ones the
// library checks against.
bool fixture_files_match() {
    struct Entry {
        const char* file;
        const char* expected;
        bool trailing_newline;
    };
    const Entry entries[] = {
        {"fkr_tree.json", qln::fixtures::fkr_tree, true},
        {"sec63_tilting.json", qln::fixtures::sec63_tilting, true},
        {"sec63_blocks.json", qln::fixtures::sec63_blocks, true},
        {"sec63_local_tiltings.json", qln::fixtures::sec63_local_tiltings, true},
        {"sec63_admissible.json", qln::fixtures::sec63_admissible, true},
        {"sec63_glued_order.json", qln::fixtures::sec63_glued_order, true},
        {"sec63_glued.dot", qln::fixtures::sec63_glued_dot, false},
    };
    bool ok = true;
    for (const Entry& e : entries) {
        std::ifstream in(std::string(QLN_FIXTURE_DIR) + "/" + e.file, std::ios::binary);
        if (!in) {
            std::cout << "fixture " << e.file << " MISSING\n";
            ok = false;
            continue;
        }
        std::ostringstream content;
        content << in.rdbuf();
        std::string want = e.expected;
        if (e.trailing_newline) want += "\n";
        if (content.str() != want) {
            std::cout << "fixture " << e.file << " DIFFERS\n";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<qln::CriterionResult> results = qln::run_acceptance(10, &std::cout);
    bool ok = qln::all_passed(results);
    if (!fixture_files_match()) ok = false;
    std::cout << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
    return ok ? 0 : 1;
}
