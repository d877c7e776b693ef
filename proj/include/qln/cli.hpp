// Command-line entry point, reusable from tests: parses argv, executes one
// verb, writes to the given streams.  Exit codes: 0 success, 1 domain error,
// 2 usage error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qln {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qln
