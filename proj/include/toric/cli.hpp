#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric {

/// Runs the command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 domain refusal, 2 parse or usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace toric
