#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sprugnoli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,       // bad expression or bad flags
  kMembershipError = 2,  // input is not a group element, or an operation is undefined for it
  kMismatch = 3,         // internal cross-check or fixture verification failed
};

/// Runs the command line `args` (without the program name), writing normal
/// output to `out` and diagnostics to `err`. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sprugnoli
