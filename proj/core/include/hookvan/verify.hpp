#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookvan/integer.hpp"
#include "hookvan/partition.hpp"

namespace hookvan {

/// Number of standard Young tableaux of shape lam, counted by removing
/// corner boxes one at a time. Throws DomainError when |lam| > bound.
BigInt syt_count_oracle(const Partition& lam, int bound = 8);

struct SweepConfig {
  std::optional<int> n_max;                // per-sweep default when unset
  std::optional<std::vector<int>> primes;  // moduli e for the abacus sweeps
  int workers = 1;                         // 0 means one per hardware thread
  std::uint64_t seed = 1;
  std::size_t cache_cap = std::size_t{1} << 20;
  std::int64_t time_budget_ms = 0;  // 0 disables the budget
  int brute_force_bound = 8;
};

struct SweepDefaults {
  int n_max = 0;
  std::vector<int> primes;
};

/// One line per asserted fact in the example replay.
struct ExampleCheck {
  std::string name;
  bool passed = false;
};

struct SweepReport {
  std::string theorem;
  int n_min = 1;
  int n_max = 0;
  std::vector<int> primes;
  long long instances = 0;
  std::vector<nlohmann::json> failures;  // sorted by serialized form
  std::vector<ExampleCheck> checks;
  std::int64_t wall_ms = 0;
  bool partial = false;

  bool ok() const { return failures.empty() && !partial; }
  std::string to_text() const;
};

nlohmann::json report_to_json(const SweepReport& report);

/// Every identifier accepted by run_sweep, in a fixed order.
const std::vector<std::string>& sweep_ids();

/// Throws DomainError for an unknown id.
SweepDefaults sweep_defaults(std::string_view id);

/// Exhaustive check of one statement over all partitions in range. Work is
/// split across config.workers threads, each with its own session.
SweepReport run_sweep(std::string_view id, const SweepConfig& config = {});

enum class SelfConjugacy { Neither, Both, ExactlyOne };

std::string_view self_conjugacy_name(SelfConjugacy s);

/// A pair of A_n labels with equal vanishing on a Sylow 2-subgroup.
struct TableRow {
  std::string name;
  Partition lam;
  Partition mu;
  int d_nu = 0;  // |difference| of nu_2 of the A_n degrees
  int d_defect = 0;
  int d_height = 0;
  SelfConjugacy pattern = SelfConjugacy::Neither;
  bool family = false;  // the 2-core may be swapped for any larger one
};

const std::vector<TableRow>& table_rows();

/// Observed signature of a pair: equal Alt p = 2 profiles plus the
/// differences and self-conjugacy pattern.
struct PairSignature {
  bool equal_profiles = false;
  int d_nu = 0;
  int d_defect = 0;
  int d_height = 0;
  SelfConjugacy pattern = SelfConjugacy::Neither;
};

PairSignature alt_pair_signature(const Partition& lam, const Partition& mu);

/// Replaces the 2-core at the root of the 2-core tower by the next
/// staircase, leaving the other layers alone.
Partition enlarge_two_core(const Partition& lam);

/// Tower-defined pair for the p = 2 converse family, n = r(r+1)/2 + 8.
std::pair<Partition, Partition> converse_pair_two(int r);

/// (p(p-1), p-1, 1) and (p(p-1), p) for odd p.
std::pair<Partition, Partition> converse_pair_odd(int p);

/// Replays the named example pairs, both converse families and the table
/// of A_n pairs with one enlargement per family row.
SweepReport reproduce_examples(const SweepConfig& config = {});

}  // namespace hookvan
