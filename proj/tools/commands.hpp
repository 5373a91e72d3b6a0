#pragma once

#include <ostream>

namespace clfrd::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kIo = 3,
  kConvergence = 4,
  kDomain = 5,
};

/// Parses argv and runs one subcommand, writing results to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clfrd::cli
