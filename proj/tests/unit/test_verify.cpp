#include <gtest/gtest.h>

#include <algorithm>

#include "hookvan/abacus.hpp"
#include "hookvan/errors.hpp"
#include "hookvan/verify.hpp"

using namespace hookvan;

TEST(SytOracle, SmallShapes) {
  EXPECT_EQ(syt_count_oracle(Partition{2, 1}), 2);
  EXPECT_EQ(syt_count_oracle(Partition{1, 1, 1, 1}), 1);
  EXPECT_EQ(syt_count_oracle(Partition{2, 2}), 2);
  EXPECT_EQ(syt_count_oracle(Partition{3, 2}), 5);
  EXPECT_EQ(syt_count_oracle(Partition{}), 1);
  EXPECT_THROW(syt_count_oracle(Partition{5, 4}), DomainError);
  EXPECT_EQ(syt_count_oracle(Partition{5, 4}, 9), 42);
}

TEST(Sweeps, IdsAndDefaults) {
  const auto& ids = sweep_ids();
  EXPECT_NE(std::find(ids.begin(), ids.end(), "S1"), ids.end());
  EXPECT_NE(std::find(ids.begin(), ids.end(), "final-proposition"), ids.end());
  EXPECT_EQ(sweep_defaults("S1").primes, (std::vector<int>{2, 3, 5, 7}));
  EXPECT_THROW(sweep_defaults("nope"), DomainError);
  EXPECT_THROW(run_sweep("nope"), DomainError);
}

TEST(Sweeps, SmallRunsPass) {
  SweepConfig cfg;
  cfg.n_max = 10;
  cfg.primes = std::vector<int>{2, 3};
  const SweepReport a = run_sweep("determine_weights", cfg);
  EXPECT_TRUE(a.ok()) << a.to_text();
  EXPECT_GT(a.instances, 0);
  EXPECT_EQ(a.n_max, 10);

  SweepConfig w;
  w.n_max = 12;
  EXPECT_TRUE(run_sweep("weight_minus_one", w).ok());
  EXPECT_TRUE(run_sweep("S2", cfg).ok());
  EXPECT_TRUE(run_sweep("A2", cfg).ok());
}

TEST(Sweeps, WorkerCountDoesNotChangeResult) {
  SweepConfig one;
  one.n_max = 10;
  SweepConfig many = one;
  many.workers = 3;
  const auto a = run_sweep("S4", one);
  const auto b = run_sweep("S4", many);
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_EQ(a.failures, b.failures);
}

TEST(Sweeps, ReportJson) {
  SweepConfig cfg;
  cfg.n_max = 6;
  const auto report = run_sweep("unique_partition", cfg);
  const auto j = report_to_json(report);
  EXPECT_EQ(j.at("theorem"), "unique_partition");
  EXPECT_EQ(j.at("failures").size(), 0u);
  EXPECT_EQ(j.at("ok"), true);
}

TEST(Sweeps, TinyBudgetMarksPartial) {
  SweepConfig cfg;
  cfg.n_max = 22;
  cfg.time_budget_ms = 1;
  const auto report = run_sweep("determine_weights", cfg);
  EXPECT_TRUE(report.partial);
  EXPECT_FALSE(report.ok());
}

TEST(Table, SignatureOfOddOrderPair) {
  // A_3 has odd order, so every defect and height there is zero.
  const auto sig = alt_pair_signature(Partition{3}, Partition{2, 1});
  EXPECT_TRUE(sig.equal_profiles);
  EXPECT_EQ(sig.d_nu, 0);
  EXPECT_EQ(sig.d_defect, 0);
  EXPECT_EQ(sig.d_height, 0);
  EXPECT_EQ(sig.pattern, SelfConjugacy::ExactlyOne);
}

TEST(Table, RowsOtherThanOddOrderMatch) {
  for (const auto& row : table_rows()) {
    if (row.lam.size() == 3) continue;
    const auto sig = alt_pair_signature(row.lam, row.mu);
    EXPECT_TRUE(sig.equal_profiles) << row.name;
    EXPECT_EQ(sig.d_nu, row.d_nu) << row.name;
    EXPECT_EQ(sig.d_defect, row.d_defect) << row.name;
    EXPECT_EQ(sig.d_height, row.d_height) << row.name;
    EXPECT_EQ(sig.pattern, row.pattern) << row.name;
  }
  EXPECT_EQ(table_rows().size(), 8u);
}

TEST(Table, EnlargementKeepsQuotient) {
  for (const auto& lam : {Partition{4}, Partition{9, 6, 3}, Partition{4, 2, 1, 1}}) {
    const Partition big = enlarge_two_core(lam);
    const auto before = core_and_quotient(lam, 2);
    const auto after = core_and_quotient(big, 2);
    EXPECT_EQ(after.quotient, before.quotient);
    const int r = before.core.length() + 1;
    EXPECT_EQ(after.core.size(), r * (r + 1) / 2);
    EXPECT_EQ(after.core.length(), r);
  }
}

TEST(Families, ConversePairs) {
  const auto [l3, m3] = converse_pair_odd(3);
  EXPECT_EQ(l3, (Partition{6, 2, 1}));
  EXPECT_EQ(m3, (Partition{6, 3}));
  const auto [l2, m2] = converse_pair_two(2);
  EXPECT_EQ(l2.size(), 11);
  EXPECT_EQ(m2.size(), 11);
  EXPECT_TRUE(m2 == conjugate(m2) || l2 == conjugate(l2));
}

TEST(Examples, ReplayReportsEachCheck) {
  const SweepReport r = reproduce_examples();
  EXPECT_GT(r.checks.size(), 10u);
  // Only the odd-order table row is expected to disagree.
  for (const auto& c : r.checks) {
    if (c.name.find("table: 3 / 2,1") == std::string::npos) EXPECT_TRUE(c.passed) << c.name;
  }
}
