#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fring {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitAssertion = 1,
    kExitUsage = 2,
    kExitCapacity = 3,
};

/// Runs the `fring` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fring
