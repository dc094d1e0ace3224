#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quant {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,      // verify failure or numerical failure
    kExitRegime = 2,       // alpha / r outside the supported regime
    kExitSpec = 3,         // bad arguments or input specification
    kExitMonotonicity = 4, // oracle alpha profile not nonincreasing
};

/// Runs `quantctl` with `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace quant
