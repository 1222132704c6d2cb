#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hookvan/integer.hpp"
#include "hookvan/partition.hpp"

namespace hookvan {

/// Cycle type of a permutation of n points, fixed points included as parts
/// equal to 1. Stored in weakly decreasing order.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(Partition parts) : parts_(std::move(parts)) {}
  CycleType(std::initializer_list<int> parts);

  /// Same grammar as Partition::parse, but parts may be given in any order.
  static CycleType parse(std::string_view text);

  static CycleType identity(int n);

  /// (length^count, 1^(n - length*count)). Throws DomainError if it does not fit.
  static CycleType power_cycles(int n, int length, int count);

  const std::vector<int>& parts() const { return parts_.parts(); }
  const Partition& as_partition() const { return parts_; }
  int size() const { return parts_.size(); }
  int multiplicity(int length) const;
  int moved_points() const;
  bool is_identity() const { return moved_points() == 0; }
  std::string str() const { return parts_.str(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend std::strong_ordering operator<=>(const CycleType& a, const CycleType& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  Partition parts_;
};

enum class GroupKind { Sym, Alt };

std::string_view group_letter(GroupKind kind);

struct GroupContext {
  int n = 1;
  GroupKind kind = GroupKind::Sym;
  std::optional<int> p;

  friend bool operator==(const GroupContext&, const GroupContext&) = default;
};

/// Every cycle type of n.
std::vector<CycleType> cycle_types_of(int n);

/// Cycle types of n all of whose parts are powers of p (1 included): the
/// types of p-elements. Ordered from the identity upwards.
std::vector<CycleType> ppower_cycle_types(int n, int p);

/// True iff permutations of this type are even: an even number of
/// even-length cycles.
bool is_even_type(const CycleType& t);

/// +1 for even types, -1 for odd ones.
int parity_sign(const CycleType& t);

/// Size of the S_n conjugacy class, n! / prod_k k^{m_k} m_k!.
BigInt class_size(const CycleType& t);

/// nu_p of |S_n| or |A_n|. Requires ctx.p.
int sylow_log_order(const GroupContext& ctx);

/// True iff the S_n class of type t splits into two A_n classes: all parts
/// odd and distinct, n > 1.
bool splits_in_alt(const CycleType& t);

std::function<bool(const CycleType&)> split_classes(int n);

}  // namespace hookvan
