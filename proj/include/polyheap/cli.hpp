#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyheap::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Reports go to `out`
/// unless --output is given; usage errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker cap for parallel suites: POLYMER_HEAPS_THREADS if set and positive,
/// otherwise the hardware concurrency (at least 1).
unsigned worker_limit();

}  // namespace polyheap::cli
