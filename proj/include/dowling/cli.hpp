#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dowling::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` unless --output redirects it, and diagnostics to `err`.
/// Never throws; every failure maps to an exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dowling::cli
