#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fankit::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kInfeasible = 3, kBudget = 4 };

/// Runs one fankit command. `args` excludes the program name. Reports go to `out`,
/// error objects to `out` as well (one JSON object per line), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace fankit::cli
