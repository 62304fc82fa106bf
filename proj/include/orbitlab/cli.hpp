#pragma once

#include <string>
#include <vector>

namespace orbitlab::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2, kFailure = 3 };

struct CommandOutcome {
  int exit_code = kOk;
  std::string payload;      // standard output
  std::string diagnostics;  // standard error
};

/// Runs one command; `args` excludes the program name.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace orbitlab::cli
