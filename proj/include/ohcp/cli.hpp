#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ohcp::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kNonIntegral = 3,
    kParseError = 4,
    kUndecided = 5,
};

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ohcp::cli
