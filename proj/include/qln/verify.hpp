// The bundled verification suite: one function per acceptance criterion,
// each bounded by max_n, all exact checks.  Criterion 13 reports the wall
// time of the sweep itself.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qln {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// Runs criteria 1-12 bounded by max_n, then appends the timing criterion.
// Progress lines go to `progress` when given.  Single-threaded.
std::vector<CriterionResult> run_acceptance(int max_n, std::ostream* progress = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);

// Embedded regression fixtures (exact bytes, one JSON value per entry).
namespace fixtures {
extern const char* const fkr_tree;
extern const char* const sec63_tilting;
extern const char* const sec63_blocks;
extern const char* const sec63_local_tiltings;
extern const char* const sec63_admissible;
extern const char* const sec63_glued_order;
extern const char* const sec63_glued_dot;
}  // namespace fixtures

}  // namespace qln
