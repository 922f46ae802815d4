#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairsolve {

// Command-line front end, stream-parameterized so tests can drive it
// in-process. args excludes the program name. Exit codes: 0 solved /
// verified ok / feasible; 1 invalid / infeasible; 2 usage, parse,
// precondition or internal error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace pairsolve
