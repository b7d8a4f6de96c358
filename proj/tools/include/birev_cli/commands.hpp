#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace birev::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (program name first). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace birev::cli
