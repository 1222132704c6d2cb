#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookvan/characters.hpp"
#include "hookvan/partition.hpp"
#include "hookvan/sym_groups.hpp"

namespace hookvan {

/// The p-power cycle types (even ones for A_n) on which a character
/// vanishes. This is the class-level form of the vanishing set on a Sylow
/// p-subgroup.
struct VanishingProfile {
  GroupContext ctx;  // ctx.p always set
  std::set<CycleType> zero_types;
  int universe_size = 0;

  int p() const { return *ctx.p; }
  friend bool operator==(const VanishingProfile&, const VanishingProfile&) = default;
};

/// p-power types of n, restricted to even types for A_n.
std::vector<CycleType> profile_universe(const GroupContext& ctx);

VanishingProfile profile_sym(const Partition& lam, int p, CharacterSession& session);
VanishingProfile profile_sym(const Partition& lam, int p);

/// Zeros of chi^lam on even p-power types; shared by both characters
/// covered by a self-conjugate label. Throws DomainError for n < 2.
VanishingProfile profile_alt(const Partition& lam, int p, CharacterSession& session);
VanishingProfile profile_alt(const Partition& lam, int p);

/// Keeps only types moving at most `max_moved` points, i.e. those meeting a
/// defect group isomorphic to a Sylow subgroup of S_{max_moved}.
VanishingProfile restrict_to_support(const VanishingProfile& profile, int max_moved);

/// Vanishing prime-power-order types over all primes q <= n.
std::set<CycleType> van_pow(const Partition& lam, GroupKind group, CharacterSession& session);
std::set<CycleType> van_pow(const Partition& lam, GroupKind group);

/// Weights w_{p^i}, i >= 1, read back from a symmetric-group profile: the
/// largest w with ((p^i)^w, 1^rest) outside the zero set. A_n profiles
/// are accepted for odd p.
std::map<int, int> recover_weights_sym(const VanishingProfile& profile);

/// Estimates for A_n at p = 2 built from a profile.
struct WeightEstimates {
  int n = 0;
  int m = 0;                   // binary digit sum of n
  std::map<int, int> w_hat0;   // i -> unimproved estimate of w_{2^i}
  std::map<int, int> w_hat;    // i -> estimate actually used
  bool improved = true;        // whether the triangular correction was applied
  int nu_hat = 0;
  int d_hat = 0;
  int h_hat = 0;

  /// w_hat for index i, 0 beyond log2(n).
  int at(int i) const;
  bool any_odd() const;
};

/// With `improved`, w_hat_2 gains one when n - 2 w_hat0_2 is not
/// triangular; otherwise w_hat = w_hat0.
WeightEstimates estimate_weights_alt(const VanishingProfile& profile, bool improved = true);

/// A pair of candidate values; `pinned` is set when the profile alone
/// decides which one holds.
struct TwoOptions {
  int first = 0;
  int second = 0;
  std::optional<int> pinned;

  bool admits(int v) const { return pinned ? *pinned == v : (v == first || v == second); }
};

/// Candidate nu_2(eta(1)), defect and 2-height of an A_n character.
struct AltDataReport {
  int n = 0;
  TwoOptions nu_degree;  // {nu_hat, nu_hat - 1}
  TwoOptions defect;     // {d_hat, d_hat + 1}
  TwoOptions height;     // {h_hat, h_hat - 1}
};

AltDataReport determine_alt_data(const WeightEstimates& est, int n);

enum class ProfileRelation { Equal, Subset, Superset, Incomparable };

std::string_view relation_name(ProfileRelation r);

/// Containment of zero sets together with the degree inequality it forces:
/// containment a in b gives nu_p(a) <= nu_p(b), loosened by one for A_n at
/// p = 2.
struct ProfileComparison {
  GroupContext ctx;
  ProfileRelation relation = ProfileRelation::Incomparable;
  int slack = 0;

  /// Checks the forced inequality against independently computed
  /// valuations of the two degrees.
  bool implication_holds(int nu_a, int nu_b) const;

  /// Whether the strict version (proper containment gives strict
  /// inequality) happens to hold for these valuations.
  bool strict_analogue_holds(int nu_a, int nu_b) const;

  std::string mandated() const;
};

/// Throws DomainError when the contexts differ.
ProfileComparison compare_profiles(const VanishingProfile& a, const VanishingProfile& b);

/// Same set relation on plain type sets.
ProfileRelation compare_sets(const std::set<CycleType>& a, const std::set<CycleType>& b);

/// True iff mu is lam twisted by a linear character of S_n (lam or lam').
bool linear_twist_equivalent(const Partition& lam, const Partition& mu);

nlohmann::json profile_to_json(const VanishingProfile& profile);
VanishingProfile profile_from_json(const nlohmann::json& j);

nlohmann::json estimates_to_json(const WeightEstimates& est);
nlohmann::json alt_report_to_json(const AltDataReport& report);

}  // namespace hookvan
