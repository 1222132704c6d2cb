#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hookvan/partition.hpp"

namespace hookvan {

/// First-column hook lengths of a partition padded to `bead_count` rows:
/// beads_i = lam_i + bead_count - i, strictly decreasing.
class BetaSet {
 public:
  BetaSet(const Partition& lam, int bead_count);

  /// Smallest multiple of e that is at least the number of parts.
  static BetaSet for_runners(const Partition& lam, int e);

  const std::vector<int>& beads() const { return beads_; }
  int bead_count() const { return static_cast<int>(beads_.size()); }

  /// Any set of distinct non-negative positions; sorted on construction.
  static BetaSet from_beads(std::vector<int> beads);

  Partition to_partition() const;

 private:
  BetaSet() = default;
  std::vector<int> beads_;
};

struct CoreQuotient {
  int e = 2;
  Partition core;
  std::vector<Partition> quotient;  // runner order 0..e-1
  int weight = 0;

  friend bool operator==(const CoreQuotient&, const CoreQuotient&) = default;
};

/// e-core, e-quotient and e-weight read off an abacus with a multiple of e
/// beads. Runner r holds the beads congruent to r mod e.
CoreQuotient core_and_quotient(const Partition& lam, int e);

Partition core(const Partition& lam, int e);

/// Inverse of core_and_quotient. Throws DomainError if `core` has an e-hook
/// or the quotient does not have e components.
Partition from_core_and_quotient(const Partition& core, const std::vector<Partition>& quotient,
                                 int e);

bool is_core(const Partition& lam, int e);

/// w_e(lam) as the size of the e-quotient.
int weight(const Partition& lam, int e);

/// w_e(lam) as the number of hooks of length divisible by e.
int weight_by_hooks(const Partition& lam, int e);

/// Map i -> w_{p^i}(lam) for every i >= 1 with p^i <= |lam|.
std::map<int, int> prime_power_weights(const Partition& lam, int p);

/// Componentwise quotient of a tuple, concatenated (Q_r of a tuple).
std::vector<Partition> quotient_of_tuple(const std::vector<Partition>& tuple, int e);
std::vector<Partition> core_of_tuple(const std::vector<Partition>& tuple, int e);
int total_size(const std::vector<Partition>& tuple);

/// Iterated e-cores of iterated e-quotients. Layer k holds e^k partitions;
/// layers past the last non-empty one are not stored (layer 0 always is).
struct CoreTower {
  int e = 2;
  std::vector<std::vector<Partition>> layers;

  int height() const;
  int layer_size(int k) const;
  /// Sum over layers of |T_k| * e^k.
  long long represented_size() const;

  friend bool operator==(const CoreTower&, const CoreTower&) = default;
};

CoreTower core_tower(const Partition& lam, int e);

/// Throws DomainError when an entry is not an e-core or a layer has the
/// wrong length.
Partition tower_to_partition(const CoreTower& tower);

/// Both identities C_r(Q_e(lam)) = Q_e(C_{er}(lam)) and
/// |Q_r(Q_e(lam))| = |Q_{er}(lam)| for this instance.
bool iterated_identity_check(const Partition& lam, int e, int r);

nlohmann::json tower_to_json(const CoreTower& tower);
CoreTower tower_from_json(const nlohmann::json& j);

}  // namespace hookvan
