#pragma once

#include <iosfwd>

namespace canondeg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,      // bad input, unwritable output, precondition failures
  kExitGorenstein = 3, // herzog on a symmetric semigroup
  kExitInternal = 4,   // an internal cross-check failed
};

/// Runs the `analyze | herzog | search | mm` front end with the given
/// arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace canondeg
