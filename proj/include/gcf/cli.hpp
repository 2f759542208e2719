#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gcf {

// Runs the command-line tool on the given arguments (program name excluded).
// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 internal assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcf
