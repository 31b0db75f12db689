#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace htlogic::cli {

/// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace htlogic::cli
