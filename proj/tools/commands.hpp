#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gz::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 2,
  kNumericalFailure = 3,
  kUsage = 64,
  kMalformedInput = 65,
};

/// Runs one subcommand. args excludes the program name. The JSON result goes to
/// `out` (or the --output file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Names of the available subcommands, in help order.
std::vector<std::string> subcommands();

}  // namespace gz::cli
