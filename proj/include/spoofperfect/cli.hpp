// Command-line front end: search, verify, robin and table subcommands.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spoofperfect::cli {

enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,  // verification failed or table diff non-empty
  kUsage = 2,
  kResource = 3,
};

/// Runs one command line (without the program name). The final recap goes
/// to out; streamed hits, progress and timings go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spoofperfect::cli
