#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinelab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Parses `args` (without the program name), runs the subcommand, and
/// returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinelab::cli
