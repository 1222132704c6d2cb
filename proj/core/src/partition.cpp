#include "hookvan/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "hookvan/errors.hpp"

namespace hookvan {

namespace {

int parse_int(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed partition '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> parse_parts(std::string_view text, bool* exponent_form) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (exponent_form) *exponent_form = false;
  if (text == "-") return {};
  if (text.empty()) throw ParseError("empty partition string (use '-')");

  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(start, comma - start);
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      int part = parse_int(token, text);
      if (part <= 0) throw ParseError("non-positive part in '" + std::string(text) + "'");
      parts.push_back(part);
    } else {
      if (exponent_form) *exponent_form = true;
      int part = parse_int(token.substr(0, caret), text);
      int count = parse_int(token.substr(caret + 1), text);
      if (part <= 0 || count < 0) {
        throw ParseError("bad exponent term in '" + std::string(text) + "'");
      }
      parts.insert(parts.end(), static_cast<std::size_t>(count), part);
    }
    start = comma + 1;
  }
  return parts;
}

Partition Partition::parse(std::string_view text) {
  bool exponent_form = false;
  std::vector<int> parts = parse_parts(text, &exponent_form);
  if (exponent_form) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
  } else if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw ParseError("parts of '" + std::string(text) + "' are not weakly decreasing");
  }
  return Partition(std::move(parts));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Partition conjugate(const Partition& lam) {
  if (lam.empty()) return {};
  std::vector<int> cols(static_cast<std::size_t>(lam.row(0)), 0);
  for (int part : lam.parts()) {
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(cols));
}

bool is_self_conjugate(const Partition& lam) { return lam == conjugate(lam); }

bool contains_node(const Partition& lam, Node node) {
  return node.row >= 1 && node.col >= 1 && node.row <= lam.length() &&
         node.col <= lam.row(node.row - 1);
}

namespace {

// Column length lam'_j for a 1-based column index.
int column_length(const Partition& lam, int col) {
  int len = 0;
  while (len < lam.length() && lam.row(len) >= col) ++len;
  return len;
}

}  // namespace

int leg_length(const Partition& lam, Node node) {
  if (!contains_node(lam, node)) throw DomainError("node outside the Young diagram");
  return column_length(lam, node.col) - node.row;
}

int hook_length(const Partition& lam, Node node) {
  if (!contains_node(lam, node)) throw DomainError("node outside the Young diagram");
  int arm = lam.row(node.row - 1) - node.col;
  return arm + leg_length(lam, node) + 1;
}

std::vector<int> hook_multiset(const Partition& lam) {
  const Partition conj = conjugate(lam);
  std::vector<int> hooks;
  hooks.reserve(static_cast<std::size_t>(lam.size()));
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.row(i); ++j) {
      hooks.push_back((lam.row(i) - j - 1) + (conj.row(j) - i - 1) + 1);
    }
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

std::vector<Hook> hooks_of_length(const Partition& lam, int e) {
  if (e < 1) throw DomainError("hook length must be positive");
  const Partition conj = conjugate(lam);
  std::vector<Hook> out;
  for (int i = 0; i < lam.length(); ++i) {
    for (int j = 0; j < lam.row(i); ++j) {
      int leg = conj.row(j) - i - 1;
      int length = (lam.row(i) - j - 1) + leg + 1;
      if (length == e) out.push_back(Hook{Node{i + 1, j + 1}, length, leg});
    }
  }
  return out;
}

HookRemoval remove_hook(const Partition& lam, Node corner) {
  if (!contains_node(lam, corner)) throw DomainError("hook corner outside the Young diagram");
  // The rim hook runs from (i, lam_i) down to (r, j) where r = lam'_j. Each
  // row k in [i, r) keeps lam_{k+1} - 1 nodes; row r keeps j - 1.
  const int i = corner.row;
  const int j = corner.col;
  const int r = column_length(lam, j);
  std::vector<int> parts = lam.parts();
  for (int k = i; k < r; ++k) {
    parts[static_cast<std::size_t>(k - 1)] = lam.row(k) - 1;
  }
  parts[static_cast<std::size_t>(r - 1)] = j - 1;
  std::erase(parts, 0);
  return HookRemoval{Partition(std::move(parts)), r - i};
}

namespace {

void emit_partitions(int remaining, std::size_t index, const std::vector<int>& allowed,
                     std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (std::size_t k = index; k < allowed.size(); ++k) {
    int part = allowed[k];
    if (part > remaining) continue;
    current.push_back(part);
    emit_partitions(remaining - part, k, allowed, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_with_parts(int n, std::vector<int> allowed) {
  if (n < 0) throw DomainError("cannot partition a negative integer");
  std::sort(allowed.begin(), allowed.end(), std::greater<>());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  std::erase_if(allowed, [](int a) { return a <= 0; });
  std::vector<Partition> out;
  std::vector<int> current;
  emit_partitions(n, 0, allowed, current, out);
  return out;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<int> all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 1);
  return partitions_with_parts(n, std::move(all));
}

}  // namespace hookvan
