#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohrlab::cli {

/// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputeFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line given as `args` (without the program name),
/// writing results to `out` and diagnostics to `err`. Returns the process
/// exit status. The environment variable BOHR_LAB_CONFIG names a config
/// file; a --config flag overrides it.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace bohrlab::cli
