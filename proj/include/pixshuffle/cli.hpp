#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pixshuffle::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kInvariantViolation = 3,
};

/// Runs one command. `args` excludes the program name.
///
///   encrypt <in> <out> [--mode none|rotate] [--key N]
///   decrypt <in> <out> [--mode none|rotate] [--key N]
///   key <in>
///   analyze <in> [--against <other>] [--n 10000] [--format structured|csv|text] [--out <path>]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pixshuffle::cli
