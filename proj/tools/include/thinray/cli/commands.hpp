#pragma once

#include <iosfwd>

namespace thinray::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBudget = 1,
  kExitUsage = 2,
  kExitFailure = 3,
};

/// Entry point of the thinray tool. The report goes to `out`, the summary and
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thinray::cli
