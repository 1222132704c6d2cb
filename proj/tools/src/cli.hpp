#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hookvan::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kSweepFailure = 3 };

enum class Format { Text, Json, Csv };

/// Settings shared by all subcommands. Precedence, lowest first: these
/// defaults, the --config file, HOOKVAN_* environment variables, flags.
struct Config {
  int n_max = 0;  // 0 keeps each sweep's own default
  int brute_force_bound = 8;
  std::int64_t cache_cap = std::int64_t{1} << 20;
  Format format = Format::Text;
  int workers = 1;
  std::int64_t time_budget_ms = 0;
  std::uint64_t seed = 1;
};

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hookvan::cli
