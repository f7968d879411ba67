#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace srd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFailure = 1,
  kUsageError = 2,
  kBudgetExhausted = 3,
};

// Runs one command line (args excludes the program name) and returns the exit
// status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace srd::cli
