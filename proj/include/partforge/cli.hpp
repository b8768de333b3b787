#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partforge::cli {

/// Exit statuses shared by every verb.
enum ExitStatus : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
  kMismatch = 3,
};

/// Runs one command line (args[0] is the program name) and returns its exit
/// status. Normal output goes to `out`, diagnostics and usage to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partforge::cli
