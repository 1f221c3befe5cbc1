#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bellmoment::cli {

enum ExitCode : int {
  ok = 0,
  failed = 1,        // verification failed, or not a moment sequence
  usage_error = 2,   // bad arguments or malformed input
  inconsistent = 3,  // internal consistency check failed
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellmoment::cli
