#pragma once

// Command-line front end: compute, verify, table.

#include <iosfwd>
#include <string>
#include <vector>

namespace eulersum {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3" or "1..4" into the inclusive list of values. Throws on malformed input.
std::vector<unsigned> parse_range(const std::string& text);

}  // namespace eulersum
