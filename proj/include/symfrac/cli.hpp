#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symfrac::cli {

/// Exit codes: 0 success, 2 mathematically negative result (non-membership,
/// indeterminate charpoly, failed verification), 1 usage or input error.
enum ExitCode { Ok = 0, Usage = 1, Negative = 2 };

/// Runs one command; `args` excludes the program name. Results go to `out`
/// (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symfrac::cli
