#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace novikov::cli {

/// Exit codes: all checks hold, a verdict failed, bad input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerdict = 1;
inline constexpr int kExitInput = 2;

/// Runs one job. `args` excludes the program name. Reports go to `out` unless
/// --output names a file (written atomically); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace novikov::cli
