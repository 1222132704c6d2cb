#include <gtest/gtest.h>

#include "hookvan/abacus.hpp"
#include "hookvan/blocks.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/errors.hpp"

using namespace hookvan;

TEST(Blocks, SymExample) {
  const BlockData b = block_data_sym(Partition{5, 2}, 2);
  EXPECT_EQ(b.core, (Partition{1}));
  EXPECT_EQ(b.weight, 3);
  EXPECT_EQ(b.defect, 4);
  EXPECT_EQ(b.sylow_log, 4);
  EXPECT_EQ(b.height, 1);
  EXPECT_EQ(b.nu_p_degree, 1);  // deg 14
}

TEST(Blocks, NuFromWeightsMatchesDegree) {
  for (int n = 1; n <= 14; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (int p : {2, 3, 5, 7}) EXPECT_EQ(nu_p_degree(lam, p), valuation(degree(lam), p));
    }
  }
}

TEST(Blocks, SymRelationAndRanges) {
  for (int n = 1; n <= 14; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (int p : {2, 3, 5}) {
        const BlockData b = block_data_sym(lam, p);
        EXPECT_EQ(b.nu_p_degree, b.sylow_log - b.defect + b.height);
        EXPECT_EQ(b.defect, legendre(p * b.weight, p));
        EXPECT_GE(b.height, 0);
        EXPECT_LE(b.defect, b.sylow_log);
        EXPECT_EQ(b.core, core(lam, p));
      }
    }
  }
}

TEST(Blocks, AltAtTwo) {
  for (int n = 2; n <= 14; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const BlockData b = block_data_alt(lam, 2);
      EXPECT_EQ(b.nu_p_degree, valuation(alt_degree(lam), 2));
      EXPECT_EQ(b.nu_p_degree, b.sylow_log - b.defect + b.height);
      EXPECT_EQ(b.sylow_log, valuation(factorial(n), 2) - 1);
      EXPECT_EQ(b.defect, std::max(legendre(2 * b.weight, 2) - 1, 0));
      EXPECT_GE(b.height, 0);
    }
  }
  EXPECT_EQ(block_data_alt(Partition{2, 2}, 2).defect, 2);
  EXPECT_EQ(block_data_alt(Partition{3}, 2).defect, 0);
  EXPECT_THROW(block_data_alt(Partition{1}, 2), DomainError);
}

TEST(Blocks, AltAtOddPrimeMatchesSym) {
  for (const auto& lam : partitions_of(9)) {
    const BlockData a = block_data_alt(lam, 3);
    const BlockData s = block_data_sym(lam, 3);
    EXPECT_EQ(a.defect, s.defect);
    EXPECT_EQ(a.height, s.height);
    EXPECT_EQ(a.nu_p_degree, s.nu_p_degree);
  }
}

TEST(Blocks, SameBlockAndJson) {
  EXPECT_TRUE(same_block(Partition{4}, Partition{2, 2}, 2));
  EXPECT_FALSE(same_block(Partition{3}, Partition{2, 1}, 2));
  const auto j = block_to_json(block_data_sym(Partition{5, 2}, 2));
  EXPECT_EQ(j.at("defect").get<int>(), 4);
  EXPECT_EQ(j.at("height").get<int>(), 1);
}
