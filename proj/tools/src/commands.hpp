#pragma once

#include <string>
#include <utility>
#include <vector>

#include "run_config.hpp"

namespace selectorate::cli {

/// What a subcommand produced: the exit code, the main document (JSON or
/// CSV), side files (the sweep SVGs) and an optional one-line summary for
/// stderr. Solver and config failures are reported by exception instead.
struct CommandResult {
  int exit_code = 0;
  std::string document;
  std::vector<std::pair<std::string, std::string>> extra_files;
  std::string summary;
};

CommandResult run_solve(const RunConfig& config);
CommandResult run_sweep(const RunConfig& config);
CommandResult run_oracle(const RunConfig& config);
CommandResult run_report(const RunConfig& config);

}  // namespace selectorate::cli
