#include <gtest/gtest.h>

#include "hookvan/abacus.hpp"
#include "hookvan/blocks.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/errors.hpp"
#include "hookvan/vanishing.hpp"

using namespace hookvan;

TEST(Profile, UniverseAndZeros) {
  const auto sym = profile_universe(GroupContext{4, GroupKind::Sym, 2});
  EXPECT_EQ(sym.size(), 4u);
  const auto alt = profile_universe(GroupContext{4, GroupKind::Alt, 2});
  EXPECT_EQ(alt.size(), 2u);  // 1^4 and 2^2

  const VanishingProfile p = profile_sym(Partition{6, 3}, 3);
  EXPECT_TRUE(p.zero_types.contains(CycleType{3, 3, 1, 1, 1}));
  EXPECT_EQ(p.universe_size, 5);
  EXPECT_FALSE(profile_sym(Partition{6, 2, 1}, 3).zero_types.contains(CycleType{3, 3, 1, 1, 1}));
  EXPECT_THROW(profile_sym(Partition{3}, 4), DomainError);
  EXPECT_THROW(profile_alt(Partition{1}, 2), DomainError);
}

TEST(Profile, MatchesDirectEvaluation) {
  CharacterSession s;
  for (int n = 2; n <= 10; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const VanishingProfile sym = profile_sym(lam, 2, s);
      const VanishingProfile alt = profile_alt(lam, 2, s);
      for (const auto& t : ppower_cycle_types(n, 2)) {
        const bool zero = s.value(lam, t) == 0;
        EXPECT_EQ(sym.zero_types.contains(t), zero);
        if (is_even_type(t)) EXPECT_EQ(alt.zero_types.contains(t), zero);
        else EXPECT_FALSE(alt.zero_types.contains(t));
      }
    }
  }
}

TEST(Profile, SelfConjugateVanishesOnOddClasses) {
  const VanishingProfile p = profile_sym(Partition{2, 2}, 2);
  EXPECT_TRUE(p.zero_types.contains(CycleType{2, 1, 1}));
  EXPECT_TRUE(p.zero_types.contains(CycleType{4}));
}

TEST(Profile, JsonRoundTrip) {
  const VanishingProfile p = profile_alt(Partition{5, 3, 1}, 2);
  EXPECT_EQ(profile_from_json(profile_to_json(p)), p);
  nlohmann::json bad = profile_to_json(p);
  bad["group"] = "X";
  EXPECT_THROW(profile_from_json(bad), ParseError);
}

TEST(Profile, RestrictToSupport) {
  const VanishingProfile p = profile_sym(Partition{2, 2}, 2);
  const VanishingProfile r = restrict_to_support(p, 2);
  EXPECT_TRUE(r.zero_types.contains(CycleType{2, 1, 1}));
  EXPECT_FALSE(r.zero_types.contains(CycleType{4}));
  EXPECT_EQ(r.universe_size, 2);
}

TEST(Weights, RecoveredFromProfile) {
  CharacterSession s;
  for (int n = 1; n <= 12; ++n) {
    for (const auto& lam : partitions_of(n)) {
      for (int p : {2, 3, 5}) {
        EXPECT_EQ(recover_weights_sym(profile_sym(lam, p, s)), prime_power_weights(lam, p))
            << lam.str() << " p=" << p;
      }
      if (n >= 2) {
        EXPECT_EQ(recover_weights_sym(profile_alt(lam, 3, s)), prime_power_weights(lam, 3));
      }
    }
  }
  EXPECT_THROW(recover_weights_sym(profile_alt(Partition{3, 1}, 2)), DomainError);
}

TEST(AltEstimates, SmallExample) {
  const WeightEstimates est = estimate_weights_alt(profile_alt(Partition{2, 2}, 2));
  EXPECT_EQ(est.m, 1);
  EXPECT_EQ(est.at(1), 2);
  EXPECT_EQ(est.nu_hat, 1);
  EXPECT_EQ(est.d_hat, 2);
  EXPECT_EQ(est.h_hat, 1);
  const AltDataReport r = determine_alt_data(est, 4);
  EXPECT_EQ(r.defect.pinned, 2);
  EXPECT_TRUE(r.nu_degree.admits(0));  // (2,2) covers two degree-1 characters
  const auto j = alt_report_to_json(r);
  EXPECT_EQ(j["nu_degree"]["two_part_options"], nlohmann::json({"2", "1"}));
  EXPECT_EQ(estimates_to_json(est)["w_hat"]["2"], 2);
  EXPECT_THROW(estimate_weights_alt(profile_sym(Partition{2, 2}, 2)), DomainError);
  EXPECT_THROW(determine_alt_data(est, 5), DomainError);
}

// The reported options always contain the true A_n data.
TEST(AltEstimates, OptionsContainTruth) {
  CharacterSession s;
  for (int n = 2; n <= 13; ++n) {
    for (const auto& lam : partitions_of(n)) {
      const BlockData b = block_data_alt(lam, 2);
      for (bool improved : {false, true}) {
        const auto est = estimate_weights_alt(profile_alt(lam, 2, s), improved);
        const auto r = determine_alt_data(est, n);
        EXPECT_TRUE(r.nu_degree.admits(b.nu_p_degree)) << lam.str();
        EXPECT_TRUE(r.defect.admits(b.defect)) << lam.str();
        EXPECT_TRUE(r.height.admits(b.height)) << lam.str();
      }
    }
  }
}

TEST(Compare, SetsAndSlack) {
  const std::set<CycleType> a{CycleType{2, 1}};
  const std::set<CycleType> b{CycleType{2, 1}, CycleType{3}};
  EXPECT_EQ(compare_sets(a, b), ProfileRelation::Subset);
  EXPECT_EQ(compare_sets(b, a), ProfileRelation::Superset);
  EXPECT_EQ(compare_sets(a, a), ProfileRelation::Equal);
  EXPECT_EQ(compare_sets(a, {CycleType{3}}), ProfileRelation::Incomparable);
  EXPECT_EQ(relation_name(ProfileRelation::Subset), "subset");

  const auto alt = compare_profiles(profile_alt(Partition{4}, 2), profile_alt(Partition{2, 2}, 2));
  EXPECT_EQ(alt.slack, 1);
  const auto sym = compare_profiles(profile_sym(Partition{4}, 2), profile_sym(Partition{3, 1}, 2));
  EXPECT_EQ(sym.slack, 0);
  EXPECT_THROW(compare_profiles(profile_sym(Partition{4}, 2), profile_sym(Partition{3}, 2)),
               DomainError);
}

TEST(Compare, ProperContainmentWithEqualValuation) {
  const auto a = profile_sym(Partition{6, 4}, 2);
  const auto b = profile_sym(Partition{6, 2, 1, 1}, 2);
  const auto cmp = compare_profiles(a, b);
  EXPECT_TRUE(cmp.relation == ProfileRelation::Subset || cmp.relation == ProfileRelation::Superset);
  const int na = valuation(degree(Partition{6, 4}), 2);
  const int nb = valuation(degree(Partition{6, 2, 1, 1}), 2);
  EXPECT_EQ(na, nb);
  EXPECT_TRUE(cmp.implication_holds(na, nb));
  EXPECT_FALSE(cmp.strict_analogue_holds(na, nb));
}

TEST(Compare, ImplicationArithmetic) {
  ProfileComparison c;
  c.relation = ProfileRelation::Subset;
  EXPECT_TRUE(c.implication_holds(1, 1));
  EXPECT_FALSE(c.implication_holds(2, 1));
  c.slack = 1;
  EXPECT_TRUE(c.implication_holds(2, 1));
  c.relation = ProfileRelation::Equal;
  EXPECT_FALSE(c.implication_holds(3, 1));
  c.ctx.p = 2;
  EXPECT_EQ(c.mandated(), "|nu_2(a) - nu_2(b)| <= 1");
}

TEST(VanPow, FourteenPair) {
  const Partition lam{6, 3, 3, 2};
  const Partition mu{5, 5, 2, 1, 1};
  EXPECT_EQ(van_pow(lam, GroupKind::Sym), van_pow(mu, GroupKind::Sym));
  EXPECT_FALSE(linear_twist_equivalent(lam, mu));
  EXPECT_TRUE(linear_twist_equivalent(lam, conjugate(lam)));
  EXPECT_THROW(linear_twist_equivalent(lam, Partition{3}), DomainError);
}
