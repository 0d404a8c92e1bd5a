#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zknot::cli {

// Runs one zknot invocation. args excludes the program name.
// Exit codes: 0 success / predicate true, 1 predicate false, 2 invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zknot::cli
