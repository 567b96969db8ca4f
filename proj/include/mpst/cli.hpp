#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mpst {

enum ExitCode { kPass = 0, kPropertyFailure = 1, kInputError = 2 };

/// Entry point of the `mpst` tool; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpst
