#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnw::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // violation found, or a query miss under --strict
  kUsage = 2,
  kIoFormat = 3,
};

/// Runs the command line `args` (without the program name) against the given
/// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pnw::cli
