#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numrad::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,              // success, or Parallel for decision commands
  kExitNotParallel = 1,
  kExitBadInput = 2,        // malformed input, I/O failure, dimension mismatch
  kExitNumerical = 3,       // convergence failure
  kExitSelfTestFailed = 4,  // demo did not reproduce its reference values
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Subcommands: radius, range, wparallel, nparallel,
/// block, demo.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace numrad::cli
