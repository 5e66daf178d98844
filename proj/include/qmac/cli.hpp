#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmac::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kInvariantError = 3,
  kIoError = 4,
};

/// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmac::cli
