#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3count::cli {

enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

// Runs the command line `args` (program name excluded) and returns the exit
// code. Output is fully determined by the arguments.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace k3count::cli
