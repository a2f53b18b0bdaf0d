#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boltzslice::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

// Parses and executes one invocation; `args` excludes the program name.
// Diagnostics go to `err`, reports and help text to `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boltzslice::cli
