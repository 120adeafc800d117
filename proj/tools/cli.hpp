#pragma once

#include <iosfwd>

namespace landing::cli {

/// Exit codes of the landing tool.
enum ExitCode : int {
  kConverged = 0,
  kUsageError = 1,
  kMaxIters = 2,
  kBreakdown = 3,
};

/// Entry point of the `landing` tool (subcommands `run` and `sweep`).
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace landing::cli
