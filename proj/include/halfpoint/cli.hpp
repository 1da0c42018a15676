#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace halfpoint {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitDiscrepancy = 3 };

/// Runs one request; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfpoint
