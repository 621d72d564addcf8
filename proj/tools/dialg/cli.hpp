#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dialg::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kSuccess = 0,
  kCheckedFalse = 1,  // the answer is "no", or the input algebra is invalid
  kUsage = 2,         // bad arguments, malformed file, I/O failure
  kViolation = 3,     // two procedures that must agree did not
};

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dialg::cli
