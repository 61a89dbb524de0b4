#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wdlab/rules_exact.hpp"

namespace wdlab {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitBudget = 2,
  kExitConstruction = 3,
  kExitVerdict = 4,
};

/// Default budget, with every state-count limit replaced by WDLAB_BUDGET when
/// that variable holds a positive integer.
SearchBudget budget_from_env();

/// Runs one invocation of the command-line tool. `args` excludes the program
/// name. Machine output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wdlab
