#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pacurve::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kRefused = 2, kExhausted = 3 };

/// Runs one command line (args[0] is the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pacurve::cli
