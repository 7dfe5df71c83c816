#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kViolations = 3,
  kIo = 4,
};

/// Runs one invocation. args excludes the program name. Results go to out,
/// diagnostics and progress to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace schubert::cli
