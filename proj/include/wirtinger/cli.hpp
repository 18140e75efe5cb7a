#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wirtinger {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitNumerical = 3,
};

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wirtinger
