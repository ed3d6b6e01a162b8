#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heightmap::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,  ///< bad command line or unreadable file
  exit_parse = 2,
  exit_validation = 3,
  exit_oracle_refused = 4,
  exit_mismatch = 5,
};

/// Runs the command line `args` (without the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heightmap::cli
