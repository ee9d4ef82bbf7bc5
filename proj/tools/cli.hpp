#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace persym::cli {

/// Exit codes shared by every command.
enum Exit : int { kOk = 0, kInternal = 1, kDomain = 2, kBudget = 3, kVerifyFailed = 4 };

/// Runs the command line `args` (without the program name). Output goes to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace persym::cli
