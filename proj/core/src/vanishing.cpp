#include "hookvan/vanishing.hpp"

#include <algorithm>

#include "hookvan/errors.hpp"
#include "hookvan/integer.hpp"

namespace hookvan {

std::vector<CycleType> profile_universe(const GroupContext& ctx) {
  if (!ctx.p) throw DomainError("profile context needs a prime");
  auto types = ppower_cycle_types(ctx.n, *ctx.p);
  if (ctx.kind == GroupKind::Alt) std::erase_if(types, [](const CycleType& t) { return !is_even_type(t); });
  return types;
}

namespace {

VanishingProfile build_profile(const Partition& lam, GroupContext ctx, CharacterSession& session) {
  VanishingProfile out;
  out.ctx = ctx;
  const auto universe = profile_universe(ctx);
  out.universe_size = static_cast<int>(universe.size());
  for (const auto& t : universe) {
    if (session.value(lam, t) == 0) out.zero_types.insert(t);
  }
  return out;
}

void require_prime(int p) {
  if (!is_prime(p)) throw DomainError("p must be prime");
}

}  // namespace

VanishingProfile profile_sym(const Partition& lam, int p, CharacterSession& session) {
  require_prime(p);
  return build_profile(lam, GroupContext{lam.size(), GroupKind::Sym, p}, session);
}

VanishingProfile profile_sym(const Partition& lam, int p) {
  CharacterSession session;
  return profile_sym(lam, p, session);
}

VanishingProfile profile_alt(const Partition& lam, int p, CharacterSession& session) {
  require_prime(p);
  if (lam.size() < 2) throw DomainError("A_n profiles need n >= 2");
  // A covered A_n character vanishes exactly where chi^lam does.
  return build_profile(lam, GroupContext{lam.size(), GroupKind::Alt, p}, session);
}

VanishingProfile profile_alt(const Partition& lam, int p) {
  CharacterSession session;
  return profile_alt(lam, p, session);
}

VanishingProfile restrict_to_support(const VanishingProfile& profile, int max_moved) {
  VanishingProfile out;
  out.ctx = profile.ctx;
  for (const auto& t : profile_universe(profile.ctx)) {
    if (t.moved_points() <= max_moved) ++out.universe_size;
  }
  for (const auto& t : profile.zero_types) {
    if (t.moved_points() <= max_moved) out.zero_types.insert(t);
  }
  return out;
}

std::set<CycleType> van_pow(const Partition& lam, GroupKind group, CharacterSession& session) {
  std::set<CycleType> out;
  for (int q : primes_up_to(lam.size())) {
    GroupContext ctx{lam.size(), group, q};
    for (const auto& t : profile_universe(ctx)) {
      if (session.value(lam, t) == 0) out.insert(t);
    }
  }
  return out;
}

std::set<CycleType> van_pow(const Partition& lam, GroupKind group) {
  CharacterSession session;
  return van_pow(lam, group, session);
}

std::map<int, int> recover_weights_sym(const VanishingProfile& profile) {
  // For odd p the power-cycle types are even, so A_n profiles work too.
  if (profile.ctx.kind == GroupKind::Alt && profile.p() == 2) {
    throw DomainError("weight recovery at p = 2 needs a symmetric-group profile");
  }
  const int n = profile.ctx.n;
  const int p = profile.p();
  std::map<int, int> out;
  const int top = max_exponent(n, p);
  for (int i = 1; i <= top; ++i) {
    const int length = static_cast<int>(ipow(p, i));
    int best = 0;
    for (int w = n / length; w >= 0; --w) {
      if (!profile.zero_types.contains(CycleType::power_cycles(n, length, w))) {
        best = w;
        break;
      }
    }
    out[i] = best;
  }
  return out;
}

int WeightEstimates::at(int i) const {
  auto it = w_hat.find(i);
  return it == w_hat.end() ? 0 : it->second;
}

bool WeightEstimates::any_odd() const {
  return std::any_of(w_hat.begin(), w_hat.end(), [](const auto& kv) { return kv.second % 2 == 1; });
}

WeightEstimates estimate_weights_alt(const VanishingProfile& profile, bool improved) {
  if (profile.ctx.kind != GroupKind::Alt || profile.p() != 2) {
    throw DomainError("weight estimates need an A_n profile at p = 2");
  }
  const int n = profile.ctx.n;
  if (n < 2) throw DomainError("weight estimates need n >= 2");

  WeightEstimates est;
  est.n = n;
  est.m = digit_sum(n, 2);
  est.improved = improved;
  const int top = max_exponent(n, 2);
  for (int i = 1; i <= top; ++i) est.w_hat0[i] = 0;

  for (const auto& t : profile_universe(profile.ctx)) {
    if (profile.zero_types.contains(t)) continue;
    for (int i = 1; i <= top; ++i) {
      // sum_{j >= i} 2^{j-i} b_j: the 2^i-cycles a type of this shape uses.
      int count = 0;
      for (int j = i; j <= top; ++j) {
        count += static_cast<int>(ipow(2, j - i)) * t.multiplicity(static_cast<int>(ipow(2, j)));
      }
      est.w_hat0[i] = std::max(est.w_hat0[i], count);
    }
  }

  est.w_hat = est.w_hat0;
  if (improved && top >= 1 && !is_triangular(n - 2LL * est.w_hat0[1])) est.w_hat[1] += 1;

  int sum = 0;
  for (auto [i, w] : est.w_hat) sum += w;
  est.nu_hat = n - est.m - sum;
  est.d_hat = std::max(legendre(2 * est.at(1), 2) - 1, 0);
  est.h_hat = est.nu_hat + est.d_hat - (n - est.m - 1);
  return est;
}

AltDataReport determine_alt_data(const WeightEstimates& est, int n) {
  if (n < 2) throw DomainError("A_n data needs n >= 2");
  if (est.n != n) throw DomainError("estimates were built for a different n");
  AltDataReport out;
  out.n = n;
  out.nu_degree = {est.nu_hat, est.nu_hat - 1, std::nullopt};
  out.defect = {est.d_hat, est.d_hat + 1, std::nullopt};
  out.height = {est.h_hat, est.h_hat - 1, std::nullopt};

  const int w2 = est.at(1);
  const bool odd = est.any_odd();

  // An odd estimate rules out self-conjugacy and forces every estimate exact.
  if (odd) {
    out.nu_degree.pinned = est.nu_hat;
    out.defect.pinned = est.d_hat;
    if (w2 > 0) out.height.pinned = est.h_hat;
  }
  // w_hat_2 = 0: either a 2-core (self-conjugate) or the one missing 2-hook.
  if (w2 == 0) {
    out.nu_degree.pinned = est.nu_hat - 1;
    out.defect.pinned = est.d_hat;
    out.height.pinned = est.h_hat - 1;
  }
  if (!out.nu_degree.pinned && est.nu_hat == 0) out.nu_degree.pinned = est.nu_hat;
  // The defect can only be off when n - 2 w_hat_2 = 3, which forces
  // n = 3 mod 4. That argument needs the triangular correction.
  if (est.improved && !out.defect.pinned && (n - 2 * w2 != 3 || n % 4 != 3)) {
    out.defect.pinned = est.d_hat;
  }
  return out;
}

std::string_view relation_name(ProfileRelation r) {
  switch (r) {
    case ProfileRelation::Equal: return "equal";
    case ProfileRelation::Subset: return "subset";
    case ProfileRelation::Superset: return "superset";
    case ProfileRelation::Incomparable: return "incomparable";
  }
  return "incomparable";
}

ProfileRelation compare_sets(const std::set<CycleType>& a, const std::set<CycleType>& b) {
  const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
  const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
  if (a_in_b && b_in_a) return ProfileRelation::Equal;
  if (a_in_b) return ProfileRelation::Subset;
  if (b_in_a) return ProfileRelation::Superset;
  return ProfileRelation::Incomparable;
}

ProfileComparison compare_profiles(const VanishingProfile& a, const VanishingProfile& b) {
  if (!(a.ctx == b.ctx)) throw DomainError("profiles come from different contexts");
  ProfileComparison out;
  out.ctx = a.ctx;
  out.relation = compare_sets(a.zero_types, b.zero_types);
  out.slack = (a.ctx.kind == GroupKind::Alt && a.p() == 2) ? 1 : 0;
  return out;
}

bool ProfileComparison::implication_holds(int nu_a, int nu_b) const {
  switch (relation) {
    case ProfileRelation::Equal:
      return nu_a <= nu_b + slack && nu_b <= nu_a + slack;
    case ProfileRelation::Subset:
      return nu_a <= nu_b + slack;
    case ProfileRelation::Superset:
      return nu_b <= nu_a + slack;
    case ProfileRelation::Incomparable:
      return true;
  }
  return true;
}

bool ProfileComparison::strict_analogue_holds(int nu_a, int nu_b) const {
  switch (relation) {
    case ProfileRelation::Subset: return nu_a < nu_b;
    case ProfileRelation::Superset: return nu_b < nu_a;
    default: return true;
  }
}

std::string ProfileComparison::mandated() const {
  const std::string p = std::to_string(ctx.p.value_or(0));
  const std::string plus = slack ? " + " + std::to_string(slack) : "";
  switch (relation) {
    case ProfileRelation::Equal:
      return slack ? "|nu_" + p + "(a) - nu_" + p + "(b)| <= " + std::to_string(slack)
                   : "nu_" + p + "(a) = nu_" + p + "(b)";
    case ProfileRelation::Subset: return "nu_" + p + "(a) <= nu_" + p + "(b)" + plus;
    case ProfileRelation::Superset: return "nu_" + p + "(b) <= nu_" + p + "(a)" + plus;
    case ProfileRelation::Incomparable: return "none";
  }
  return "none";
}

bool linear_twist_equivalent(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size()) throw DomainError("partitions of different sizes");
  return mu == lam || mu == conjugate(lam);
}

nlohmann::json profile_to_json(const VanishingProfile& profile) {
  nlohmann::json zeros = nlohmann::json::array();
  for (const auto& t : profile.zero_types) zeros.push_back(t.str());
  return {{"n", profile.ctx.n},
          {"group", std::string(group_letter(profile.ctx.kind))},
          {"p", profile.p()},
          {"zeros", std::move(zeros)},
          {"universe", profile.universe_size}};
}

VanishingProfile profile_from_json(const nlohmann::json& j) {
  VanishingProfile out;
  const std::string group = j.at("group").get<std::string>();
  if (group != "S" && group != "A") throw ParseError("profile group must be S or A");
  out.ctx = GroupContext{j.at("n").get<int>(), group == "S" ? GroupKind::Sym : GroupKind::Alt,
                         j.at("p").get<int>()};
  for (const auto& z : j.at("zeros")) out.zero_types.insert(CycleType::parse(z.get<std::string>()));
  out.universe_size = j.at("universe").get<int>();
  return out;
}

namespace {

nlohmann::json weights_json(const std::map<int, int>& w) {
  nlohmann::json out = nlohmann::json::object();
  for (auto [i, v] : w) out[std::to_string(ipow(2, i))] = v;
  return out;
}

nlohmann::json options_json(const TwoOptions& o) {
  nlohmann::json out = {{"options", {o.first, o.second}}};
  out["pinned"] = o.pinned ? nlohmann::json(*o.pinned) : nlohmann::json(nullptr);
  return out;
}

std::string power_of_two(int k) {
  if (k < 0) return "1/2";
  BigInt v = 1;
  v <<= k;
  return v.str();
}

}  // namespace

nlohmann::json estimates_to_json(const WeightEstimates& est) {
  return {{"n", est.n},
          {"m", est.m},
          {"w_hat0", weights_json(est.w_hat0)},
          {"w_hat", weights_json(est.w_hat)},
          {"improved", est.improved},
          {"nu_hat", est.nu_hat},
          {"d_hat", est.d_hat},
          {"h_hat", est.h_hat}};
}

nlohmann::json alt_report_to_json(const AltDataReport& report) {
  nlohmann::json degree = options_json(report.nu_degree);
  degree["two_part_options"] = {power_of_two(report.nu_degree.first),
                                power_of_two(report.nu_degree.second)};
  return {{"n", report.n},
          {"nu_degree", std::move(degree)},
          {"defect", options_json(report.defect)},
          {"height", options_json(report.height)}};
}

}  // namespace hookvan
