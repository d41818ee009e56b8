#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace covgpd {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,      // the mathematics says no; a report is printed
  kExitInput = 2,         // malformed input or bad usage
  kExitVerification = 3,  // a checked theorem failed
};

/// Runs the tool on `args` (without the program name). Reports go to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covgpd
