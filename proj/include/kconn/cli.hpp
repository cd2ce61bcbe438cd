#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kconn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The last line
/// written to `out` is always `RESULT <verdict> [key=value ...]`, except for
/// usage errors and --help.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kconn::cli
