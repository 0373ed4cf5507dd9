#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace congruent::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kResourceGuard = 3,
};

/// Runs one command line (without the program name), writing results to out
/// and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace congruent::cli
