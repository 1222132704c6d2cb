#include "hookvan/sym_groups.hpp"

#include <algorithm>
#include <map>

#include "hookvan/errors.hpp"

namespace hookvan {

namespace {

Partition sorted_partition(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

CycleType::CycleType(std::initializer_list<int> parts)
    : parts_(sorted_partition(std::vector<int>(parts))) {}

CycleType CycleType::parse(std::string_view text) {
  return CycleType(sorted_partition(parse_parts(text)));
}

CycleType CycleType::identity(int n) {
  if (n < 0) throw DomainError("negative degree");
  return CycleType(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

CycleType CycleType::power_cycles(int n, int length, int count) {
  if (length < 1 || count < 0 || static_cast<long long>(length) * count > n) {
    throw DomainError("cycles do not fit in the given degree");
  }
  std::vector<int> parts(static_cast<std::size_t>(count), length);
  parts.insert(parts.end(), static_cast<std::size_t>(n - length * count), 1);
  return CycleType(sorted_partition(std::move(parts)));
}

int CycleType::multiplicity(int length) const {
  return static_cast<int>(std::count(parts().begin(), parts().end(), length));
}

int CycleType::moved_points() const { return size() - multiplicity(1); }

std::string_view group_letter(GroupKind kind) { return kind == GroupKind::Sym ? "S" : "A"; }

std::vector<CycleType> cycle_types_of(int n) {
  std::vector<CycleType> out;
  for (auto& lam : partitions_of(n)) out.emplace_back(std::move(lam));
  return out;
}

std::vector<CycleType> ppower_cycle_types(int n, int p) {
  if (!is_prime(p)) throw DomainError("ppower_cycle_types needs a prime");
  std::vector<int> allowed;
  for (long long q = 1; q <= std::max(n, 1); q *= p) allowed.push_back(static_cast<int>(q));
  std::vector<CycleType> out;
  for (auto& lam : partitions_with_parts(n, allowed)) out.emplace_back(std::move(lam));
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_even_type(const CycleType& t) {
  int even_cycles = 0;
  for (int part : t.parts()) even_cycles += (part % 2 == 0);
  return even_cycles % 2 == 0;
}

int parity_sign(const CycleType& t) { return is_even_type(t) ? 1 : -1; }

BigInt class_size(const CycleType& t) {
  std::map<int, int> mult;
  for (int part : t.parts()) ++mult[part];
  BigInt centralizer = 1;
  for (auto [length, count] : mult) {
    for (int i = 0; i < count; ++i) centralizer *= length;
    centralizer *= factorial(count);
  }
  return factorial(t.size()) / centralizer;
}

int sylow_log_order(const GroupContext& ctx) {
  if (!ctx.p) throw DomainError("sylow_log_order needs a prime in the context");
  const int p = *ctx.p;
  if (!is_prime(p)) throw DomainError("sylow_log_order needs a prime");
  int a = legendre(ctx.n, p);
  // |A_n| = n!/2 for n >= 2; A_0 and A_1 are trivial.
  if (ctx.kind == GroupKind::Alt && p == 2 && ctx.n >= 2) --a;
  return a;
}

bool splits_in_alt(const CycleType& t) {
  if (t.size() <= 1) return false;
  const auto& parts = t.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0) return false;
    if (i > 0 && parts[i] == parts[i - 1]) return false;
  }
  return true;
}

std::function<bool(const CycleType&)> split_classes(int n) {
  return [n](const CycleType& t) { return t.size() == n && splits_in_alt(t); };
}

}  // namespace hookvan
