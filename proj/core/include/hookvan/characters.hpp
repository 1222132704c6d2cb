#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "hookvan/integer.hpp"
#include "hookvan/memo_cache.hpp"
#include "hookvan/partition.hpp"
#include "hookvan/sym_groups.hpp"

namespace hookvan {

enum class AltBranch { None, Plus, Minus };

/// An irreducible character of S_n or A_n.
///
/// For A_n the label is canonicalised to the larger of lam and lam' (they
/// restrict to the same character); a branch is carried exactly when the
/// label is self-conjugate and n > 1.
class CharacterId {
 public:
  static CharacterId sym(Partition lam);
  static CharacterId alt(const Partition& lam, AltBranch branch = AltBranch::None);

  GroupKind group() const { return group_; }
  const Partition& label() const { return label_; }
  AltBranch branch() const { return branch_; }
  int n() const { return label_.size(); }

  friend bool operator==(const CharacterId&, const CharacterId&) = default;

 private:
  CharacterId(GroupKind g, Partition lam, AltBranch b)
      : group_(g), label_(std::move(lam)), branch_(b) {}
  GroupKind group_;
  Partition label_;
  AltBranch branch_;
};

/// chi^lam(1) = n! / prod of hook lengths.
BigInt degree(const Partition& lam);

/// Degree of the A_n character covered by chi^lam: halved when lam is
/// self-conjugate and n > 1.
BigInt alt_degree(const Partition& lam);

/// One e-rim-hook removal computed on the beta set.
struct RimHookStep {
  Partition rest;
  int leg = 0;
};

/// Every partition obtained from lam by removing one hook of length e.
std::vector<RimHookStep> rim_hook_removals(const Partition& lam, int e);

enum class PeelOrder { LargestFirst, SmallestFirst };

struct SessionOptions {
  std::size_t cache_cap = std::size_t{1} << 20;
  PeelOrder order = PeelOrder::LargestFirst;
};

/// Murnaghan-Nakayama evaluator with a bounded memo table keyed on
/// (partition, remaining cycles). A session is not thread-safe; give each
/// worker its own.
class CharacterSession {
 public:
  explicit CharacterSession(SessionOptions options = {});

  /// chi^lam on the class of cycle type t. Throws DomainError when
  /// |t| != |lam|.
  BigInt value(const Partition& lam, const CycleType& t);

  const SessionOptions& options() const { return options_; }
  std::size_t cache_size() const { return cache_.size(); }
  std::size_t cache_hits() const { return cache_.hits(); }
  std::size_t cache_evictions() const { return cache_.evictions(); }

 private:
  struct Key {
    Partition lam;
    std::vector<int> cycles;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  BigInt evaluate(const Partition& lam, std::vector<int>& cycles);

  SessionOptions options_;
  MemoCache<Key, BigInt, KeyHash> cache_;
};

/// Evaluates with a per-thread default session.
BigInt value(const Partition& lam, const CycleType& t);

struct UnsupportedSplitClass {
  CycleType type;
};

using AltValue = std::variant<BigInt, UnsupportedSplitClass>;

/// Value of an A_n character on an even class. For a self-conjugate label
/// on a non-split class this is chi^lam(t) / 2; split classes are reported
/// as UnsupportedSplitClass. Throws DomainError for odd types or a
/// non-Alt character.
AltValue value_alt(const CharacterId& chi, const CycleType& t, CharacterSession& session);
AltValue value_alt(const CharacterId& chi, const CycleType& t);

/// Sign (-1)^(sum of legs) of any path of e-hook removals from lam to mu,
/// or nullopt when mu is unreachable.
std::optional<int> sign_between(const Partition& lam, const Partition& mu, int e);

/// Number of distinct paths of e-hook removals from lam to mu.
BigInt path_count(const Partition& lam, const Partition& mu, int e);

}  // namespace hookvan
