#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace basecraft {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitMismatch = 2, kExitBudget = 3 };

// args excludes the program name. JSON goes to out, the human summary to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace basecraft
