// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hookvan/abacus.hpp"
#include "hookvan/blocks.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/partition.hpp"
#include "hookvan/vanishing.hpp"
#include "hookvan/verify.hpp"

using namespace hookvan;

namespace {

struct Outcome {
  bool passed = true;
  std::vector<std::string> problems;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    passed = false;
    problems.push_back(what);
  }

  std::string detail() const {
    const auto& items = passed ? notes : problems;
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : "; ") + item;
    return out;
  }
};

std::string cli_output(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  cli::run_cli(args, out, err);
  std::string s = out.str();
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

void require_sweep(Outcome& o, const std::string& id, int n_max, std::vector<int> primes = {}) {
  SweepConfig cfg;
  cfg.n_max = n_max;
  if (!primes.empty()) cfg.primes = primes;
  const SweepReport r = run_sweep(id, cfg);
  o.require(r.ok(), id + ": " + std::to_string(r.failures.size()) + " failures" + (r.partial ? ", partial" : ""));
  o.notes.push_back(id + " " + std::to_string(r.instances) + " instances");
}

Outcome orthogonality() {
  Outcome o;
  CharacterSession s;
  long long rows = 0;
  for (int n = 1; n <= 8; ++n) {
    const auto parts = partitions_of(n);
    const auto types = cycle_types_of(n);
    std::vector<std::vector<BigInt>> table;
    for (const auto& lam : parts) {
      std::vector<BigInt> row;
      for (const auto& t : types) row.push_back(s.value(lam, t));
      table.push_back(std::move(row));
    }
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t b = 0; b < parts.size(); ++b) {
        BigInt sum = 0;
        for (std::size_t c = 0; c < types.size(); ++c) sum += class_size(types[c]) * table[a][c] * table[b][c];
        o.require(sum == (a == b ? factorial(n) : BigInt(0)),
                  "n=" + std::to_string(n) + " rows " + parts[a].str() + " / " + parts[b].str());
      }
    }
    rows += static_cast<long long>(parts.size());
  }
  o.notes.push_back(std::to_string(rows) + " characters, n <= 8");
  return o;
}

Outcome pinned_values() {
  Outcome o;
  o.require(cli_output({"value", "6,2,1", "3,3,1,1,1"}) == "-3", "value 6,2,1 3,3,1,1,1 != -3");
  o.require(cli_output({"value", "6,3", "3,3,1,1,1"}) == "0", "value 6,3 3,3,1,1,1 != 0");
  o.require(cli_output({"value", "2,2", "2,1,1"}) == "0", "value 2,2 2,1,1 != 0");

  const Partition lam{9, 8, 6, 5, 1};
  const HookRemoval r = remove_hook(lam, Node{2, 3});
  o.require(hook_length(lam, Node{2, 3}) == 8 && r.rest == Partition{9, 5, 4, 2, 1} && r.leg == 2,
            "hook removal figure");

  const Partition fig{5, 3, 3, 3, 1};
  const CoreTower expected{2, {{Partition{1}}, {Partition{2, 1}, Partition{}},
                               {Partition{}, Partition{}, Partition{1}, Partition{1}}}};
  o.require(core_tower(fig, 2) == expected, "tower figure");
  o.require(tower_to_partition(expected) == fig, "tower figure read back");
  const CoreQuotient cq = core_and_quotient(fig, 2);
  o.require(cq.core == Partition{1} && cq.weight == 7 &&
                cq.quotient == std::vector<Partition>{Partition{2, 1}, Partition{2, 2}},
            "first tower step");
  o.notes.push_back("three values via the CLI, both figures");
  return o;
}

Outcome determine_weights() {
  Outcome o;
  require_sweep(o, "determine_weights", 16, {2, 3, 5, 7});
  return o;
}

Outcome weight_minus_one() {
  Outcome o;
  require_sweep(o, "weight_minus_one", 16, {2});
  return o;
}

Outcome containment() {
  Outcome o;
  require_sweep(o, "S2", 12, {2, 3});
  require_sweep(o, "S3", 12);
  CharacterSession s;

  const Partition a{6, 4};
  const Partition b{6, 2, 1, 1};
  const auto cmp = compare_profiles(profile_sym(a, 2, s), profile_sym(b, 2, s));
  const int na = valuation(degree(a), 2);
  const int nb = valuation(degree(b), 2);
  const bool proper = cmp.relation == ProfileRelation::Subset || cmp.relation == ProfileRelation::Superset;
  o.require(proper && cmp.implication_holds(na, nb) && !cmp.strict_analogue_holds(na, nb),
            "S10 pair does not witness the strict version failing");

  const Partition c{6, 3, 3, 2};
  const Partition d{5, 5, 2, 1, 1};
  o.require(van_pow(c, GroupKind::Sym, s) == van_pow(d, GroupKind::Sym, s), "S14 Van_pow differ");
  const BigInt dc = degree(c);
  const BigInt dd = degree(d);
  // Hook formula against MN at the identity, and sum of squared hook-formula
  // degrees against 14!.
  BigInt squares = 0;
  for (const auto& lam : partitions_of(14)) squares += degree(lam) * degree(lam);
  o.require(dc == dd && s.value(c, CycleType::identity(14)) == dc &&
                s.value(d, CycleType::identity(14)) == dd && squares == factorial(14),
            "S14 degrees");
  o.require(!linear_twist_equivalent(c, d), "S14 pair is a linear twist");
  o.notes.push_back("S14 degrees both " + dc.str());
  return o;
}

Outcome alt_estimators() {
  Outcome o;
  for (const char* id : {"An-vanishing", "weight-estimates", "alt-determine-weights", "alt-determine-data"}) {
    require_sweep(o, id, 16, {2});
  }
  return o;
}

Outcome alt17() {
  Outcome o;
  const Partition a{10, 4, 3};
  const Partition b{7, 2, 2, 2, 2, 2};
  o.require(van_pow(a, GroupKind::Alt) == van_pow(b, GroupKind::Alt), "van_pow differ");
  o.require(degree(b) == 2 * degree(a), "degree ratio is not 2");
  o.notes.push_back("degrees " + degree(a).str() + " and " + degree(b).str());
  return o;
}

bool row_matches(const TableRow& row, const Partition& lam, const Partition& mu) {
  const PairSignature sig = alt_pair_signature(lam, mu);
  return sig.equal_profiles && sig.d_nu == row.d_nu && sig.d_defect == row.d_defect &&
         sig.d_height == row.d_height && sig.pattern == row.pattern;
}

Outcome table() {
  Outcome o;
  int checked = 0;
  for (const auto& row : table_rows()) {
    const PairSignature sig = alt_pair_signature(row.lam, row.mu);
    o.require(row_matches(row, row.lam, row.mu),
              row.lam.str() + " / " + row.mu.str() + ": expected (" + std::to_string(row.d_nu) + "," +
                  std::to_string(row.d_defect) + "," + std::to_string(row.d_height) + ", " +
                  std::string(self_conjugacy_name(row.pattern)) + "), observed (" + std::to_string(sig.d_nu) + "," + std::to_string(sig.d_defect) +
                  "," + std::to_string(sig.d_height) + ", " +
                  std::string(self_conjugacy_name(sig.pattern)) + ")");
    ++checked;
    if (row.family) {
      const Partition lam = enlarge_two_core(row.lam);
      const Partition mu = enlarge_two_core(row.mu);
      o.require(row_matches(row, lam, mu), row.lam.str() + " / " + row.mu.str() + " enlarged to " + lam.str() + " / " + mu.str());
      ++checked;
    }
  }
  o.notes.push_back(std::to_string(checked) + " pairs");
  return o;
}

Outcome final_proposition() {
  Outcome o;
  require_sweep(o, "final-proposition", 14, {2});
  return o;
}

struct Criterion {
  int number;
  std::string title;
  long long limit_ms;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "character tables satisfy row orthogonality", 10'000, orthogonality},
      {2, "pinned values and figures", 0, pinned_values},
      {3, "weights recovered from vanishing", 60'000, determine_weights},
      {4, "non-vanishing at w - 1 cycles", 0, weight_minus_one},
      {5, "containment bounds p-parts, S10 and S14 pairs", 0, containment},
      {6, "A_n estimators at p = 2", 120'000, alt_estimators},
      {7, "A_17 pair", 30'000, alt17},
      {8, "table of A_n pairs", 0, table},
      {9, "distinct blocks with unequal 2-parts", 0, final_proposition},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_ms > 0 && ms >= c.limit_ms) o.require(false, "over " + std::to_string(c.limit_ms) + " ms");
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << "  [" << ms << " ms]  "
              << o.detail() << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
