#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankforge {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitFieldTooSmall = 4,
  kExitInvariant = 5,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankforge
