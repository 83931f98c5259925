#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace enigme::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitOutput = 3;
inline constexpr int kExitGeneration = 4;

/// Runs `enigme <numeric|sequence|physics> <1d|2d|3d> [options]`.
/// `args` excludes the program name. Puzzle data goes to `out`, everything
/// else to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace enigme::cli
