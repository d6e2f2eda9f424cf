#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace knotsig::cli {

enum ExitCode { kOk = 0, kInputError = 2, kInternalError = 3 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotsig::cli
