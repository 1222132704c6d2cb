#pragma once

#include <compare>
#include <initializer_list>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hookvan {

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// The empty partition is the unique partition of 0. Values are immutable;
/// every operation that changes the shape returns a new Partition.
class Partition {
 public:
  Partition() = default;

  /// Trailing zero parts are dropped. Throws DomainError on negative or
  /// increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Accepts "6,3,3,2", exponent form "2^3,1^2", or "-" for the empty
  /// partition. Parts in exponent form may appear in any order.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// 0-based row access; rows past the end have length 0.
  int row(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  /// Comma form, "-" when empty.
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// A node (row, col) of a Young diagram, 1-based.
struct Node {
  int row = 1;
  int col = 1;
  friend bool operator==(const Node&, const Node&) = default;
};

struct Hook {
  Node corner;
  int length = 0;
  int leg = 0;
  friend bool operator==(const Hook&, const Hook&) = default;
};

struct HookRemoval {
  Partition rest;
  int leg = 0;
};

Partition conjugate(const Partition& lam);
bool is_self_conjugate(const Partition& lam);

bool contains_node(const Partition& lam, Node node);
int hook_length(const Partition& lam, Node node);
int leg_length(const Partition& lam, Node node);

/// Hook lengths of every node, sorted in decreasing order.
std::vector<int> hook_multiset(const Partition& lam);

/// Hooks of length exactly e, in row-major order of their corners.
std::vector<Hook> hooks_of_length(const Partition& lam, int e);

/// Removes the rim hook attached to `corner`. Throws DomainError when the
/// corner lies outside the diagram.
HookRemoval remove_hook(const Partition& lam, Node corner);

/// Splits "a,b^k,..." into parts in the order written, expanding exponents.
/// "-" yields no parts. Sets *exponent_form when any '^' term was present.
std::vector<int> parse_parts(std::string_view text, bool* exponent_form = nullptr);

/// All partitions of n in reverse lexicographic order, starting with (n).
std::vector<Partition> partitions_of(int n);

/// Partitions of n into parts drawn from `allowed` (any order), emitted in
/// reverse lexicographic order.
std::vector<Partition> partitions_with_parts(int n, std::vector<int> allowed);

}  // namespace hookvan
