#include "hookvan/characters.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "hookvan/abacus.hpp"
#include "hookvan/errors.hpp"

namespace hookvan {

CharacterId CharacterId::sym(Partition lam) {
  return CharacterId(GroupKind::Sym, std::move(lam), AltBranch::None);
}

CharacterId CharacterId::alt(const Partition& lam, AltBranch branch) {
  Partition conj = conjugate(lam);
  const bool splits = lam == conj && lam.size() > 1;
  if (splits && branch == AltBranch::None) {
    throw DomainError("self-conjugate label " + lam.str() + " needs a + or - branch in A_n");
  }
  if (!splits && branch != AltBranch::None) {
    throw DomainError("label " + lam.str() + " does not split in A_n");
  }
  return CharacterId(GroupKind::Alt, std::max(lam, conj), branch);
}

BigInt degree(const Partition& lam) {
  BigInt hooks = 1;
  for (int h : hook_multiset(lam)) hooks *= h;
  return factorial(lam.size()) / hooks;
}

BigInt alt_degree(const Partition& lam) {
  BigInt d = degree(lam);
  if (lam.size() > 1 && is_self_conjugate(lam)) d /= 2;
  return d;
}

std::vector<RimHookStep> rim_hook_removals(const Partition& lam, int e) {
  if (e < 1) throw DomainError("hook length must be positive");
  const int k = lam.length();
  std::vector<int> beads(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) beads[static_cast<std::size_t>(i)] = lam.row(i) + k - 1 - i;
  // beads strictly decreasing; mark occupancy for quick lookups.
  const int top = k ? beads.front() : 0;
  std::vector<char> occupied(static_cast<std::size_t>(top + 1), 0);
  for (int b : beads) occupied[static_cast<std::size_t>(b)] = 1;

  std::vector<RimHookStep> out;
  for (int i = 0; i < k; ++i) {
    const int from = beads[static_cast<std::size_t>(i)];
    const int to = from - e;
    if (to < 0 || occupied[static_cast<std::size_t>(to)]) continue;
    int leg = 0;
    for (int x = to + 1; x < from; ++x) leg += occupied[static_cast<std::size_t>(x)];
    std::vector<int> moved = beads;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      parts[static_cast<std::size_t>(j)] = moved[static_cast<std::size_t>(j)] - (k - 1 - j);
    }
    out.push_back(RimHookStep{Partition(std::move(parts)), leg});
  }
  return out;
}

std::size_t CharacterSession::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = PartitionHash{}(k.lam);
  for (int c : k.cycles) h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

CharacterSession::CharacterSession(SessionOptions options)
    : options_(options), cache_(options.cache_cap) {}

BigInt CharacterSession::value(const Partition& lam, const CycleType& t) {
  if (lam.size() != t.size()) {
    throw DomainError("cycle type " + t.str() + " does not match partition " + lam.str());
  }
  // The next cycle to peel sits at the back.
  std::vector<int> cycles = t.parts();
  if (options_.order == PeelOrder::LargestFirst) std::reverse(cycles.begin(), cycles.end());
  return evaluate(lam, cycles);
}

BigInt CharacterSession::evaluate(const Partition& lam, std::vector<int>& cycles) {
  if (cycles.empty()) return lam.empty() ? 1 : 0;
  Key key{lam, cycles};
  if (const BigInt* hit = cache_.find(key)) return *hit;

  const int e = cycles.back();
  cycles.pop_back();
  BigInt total = 0;
  for (const auto& step : rim_hook_removals(lam, e)) {
    BigInt sub = evaluate(step.rest, cycles);
    if (step.leg % 2) {
      total -= sub;
    } else {
      total += sub;
    }
  }
  cycles.push_back(e);
  cache_.insert(std::move(key), total);
  return total;
}

BigInt value(const Partition& lam, const CycleType& t) {
  thread_local CharacterSession session;
  return session.value(lam, t);
}

AltValue value_alt(const CharacterId& chi, const CycleType& t, CharacterSession& session) {
  if (chi.group() != GroupKind::Alt) throw DomainError("value_alt needs an A_n character");
  if (chi.n() != t.size()) throw DomainError("cycle type does not match character degree");
  if (!is_even_type(t)) throw DomainError("cycle type " + t.str() + " is not in A_n");
  BigInt v = session.value(chi.label(), t);
  if (chi.branch() == AltBranch::None) return v;
  if (splits_in_alt(t)) return UnsupportedSplitClass{t};
  // phi+ and phi- agree on classes that do not split and sum to chi^lam.
  return BigInt(v / 2);
}

AltValue value_alt(const CharacterId& chi, const CycleType& t) {
  thread_local CharacterSession session;
  return value_alt(chi, t, session);
}

namespace {

bool diagram_contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i) {
    if (inner.row(i) > outer.row(i)) return false;
  }
  return true;
}

// mu is reachable from lam by e-hook removals iff they share an e-core and
// each quotient component of mu fits inside the matching one of lam.
bool reachable(const CoreQuotient& from, const CoreQuotient& to) {
  if (from.core != to.core) return false;
  for (std::size_t r = 0; r < from.quotient.size(); ++r) {
    if (!diagram_contains(from.quotient[r], to.quotient[r])) return false;
  }
  return true;
}

}  // namespace

std::optional<int> sign_between(const Partition& lam, const Partition& mu, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  const CoreQuotient target = core_and_quotient(mu, e);
  if (!reachable(core_and_quotient(lam, e), target)) return std::nullopt;
  int legs = 0;
  Partition current = lam;
  while (current != mu) {
    for (auto& step : rim_hook_removals(current, e)) {
      if (reachable(core_and_quotient(step.rest, e), target)) {
        legs += step.leg;
        current = std::move(step.rest);
        break;
      }
    }
  }
  return legs % 2 ? -1 : 1;
}

BigInt path_count(const Partition& lam, const Partition& mu, int e) {
  if (e < 2) throw DomainError("e must be at least 2");
  const CoreQuotient target = core_and_quotient(mu, e);
  std::unordered_map<Partition, BigInt, PartitionHash> memo;
  std::function<BigInt(const Partition&)> count = [&](const Partition& alpha) -> BigInt {
    if (alpha == mu) return 1;
    if (auto it = memo.find(alpha); it != memo.end()) return it->second;
    BigInt total = 0;
    if (alpha.size() > mu.size() && reachable(core_and_quotient(alpha, e), target)) {
      for (const auto& step : rim_hook_removals(alpha, e)) total += count(step.rest);
    }
    memo.emplace(alpha, total);
    return total;
  };
  return count(lam);
}

}  // namespace hookvan
