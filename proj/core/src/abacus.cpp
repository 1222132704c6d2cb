#include "hookvan/abacus.hpp"

#include <algorithm>
#include <functional>

#include "hookvan/errors.hpp"
#include "hookvan/integer.hpp"

namespace hookvan {

namespace {

void require_e(int e) {
  if (e < 2) throw DomainError("e must be at least 2");
}

// Partition whose beta set on a single runner has the given positions.
Partition from_positions(std::vector<int> positions) {
  std::sort(positions.begin(), positions.end(), std::greater<>());
  const int k = static_cast<int>(positions.size());
  std::vector<int> parts(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    parts[static_cast<std::size_t>(j)] = positions[static_cast<std::size_t>(j)] - (k - 1 - j);
  }
  return Partition(std::move(parts));
}

}  // namespace

BetaSet::BetaSet(const Partition& lam, int bead_count) {
  if (bead_count < lam.length()) throw DomainError("too few beads for partition");
  beads_.resize(static_cast<std::size_t>(bead_count));
  for (int i = 0; i < bead_count; ++i) {
    beads_[static_cast<std::size_t>(i)] = lam.row(i) + bead_count - 1 - i;
  }
}

BetaSet BetaSet::for_runners(const Partition& lam, int e) {
  require_e(e);
  int beads = (lam.length() + e - 1) / e * e;
  return BetaSet(lam, beads);
}

BetaSet BetaSet::from_beads(std::vector<int> beads) {
  std::sort(beads.begin(), beads.end(), std::greater<>());
  if (std::adjacent_find(beads.begin(), beads.end()) != beads.end()) {
    throw DomainError("beta set has repeated beads");
  }
  if (!beads.empty() && beads.back() < 0) throw DomainError("beta set has negative bead");
  BetaSet out;
  out.beads_ = std::move(beads);
  return out;
}

Partition BetaSet::to_partition() const { return from_positions(beads_); }

CoreQuotient core_and_quotient(const Partition& lam, int e) {
  require_e(e);
  const BetaSet beta = BetaSet::for_runners(lam, e);
  std::vector<std::vector<int>> runners(static_cast<std::size_t>(e));
  for (int b : beta.beads()) runners[static_cast<std::size_t>(b % e)].push_back(b / e);

  CoreQuotient out;
  out.e = e;
  std::vector<int> core_beads;
  for (int r = 0; r < e; ++r) {
    const auto& positions = runners[static_cast<std::size_t>(r)];
    Partition component = from_positions(positions);
    out.weight += component.size();
    out.quotient.push_back(std::move(component));
    // Sliding every bead up its runner removes all e-hooks.
    for (int q = 0; q < static_cast<int>(positions.size()); ++q) core_beads.push_back(q * e + r);
  }
  out.core = BetaSet::from_beads(std::move(core_beads)).to_partition();
  return out;
}

Partition core(const Partition& lam, int e) { return core_and_quotient(lam, e).core; }

bool is_core(const Partition& lam, int e) { return core_and_quotient(lam, e).weight == 0; }

int weight(const Partition& lam, int e) { return core_and_quotient(lam, e).weight; }

int weight_by_hooks(const Partition& lam, int e) {
  require_e(e);
  auto hooks = hook_multiset(lam);
  return static_cast<int>(std::count_if(hooks.begin(), hooks.end(), [e](int h) { return h % e == 0; }));
}

std::map<int, int> prime_power_weights(const Partition& lam, int p) {
  std::map<int, int> out;
  const int top = max_exponent(lam.size(), p);
  for (int i = 1; i <= top; ++i) out[i] = weight(lam, static_cast<int>(ipow(p, i)));
  return out;
}

Partition from_core_and_quotient(const Partition& core_part, const std::vector<Partition>& quotient,
                                 int e) {
  require_e(e);
  if (static_cast<int>(quotient.size()) != e) {
    throw DomainError("quotient must have exactly e components");
  }
  if (!is_core(core_part, e)) throw DomainError("core " + core_part.str() + " has an e-hook");

  // Enough beads that every runner can hold its quotient component.
  int longest = 0;
  for (const auto& q : quotient) longest = std::max(longest, q.length());
  int bead_count = (core_part.length() + e - 1) / e * e;
  for (;;) {
    BetaSet beta(core_part, bead_count);
    std::vector<int> per_runner(static_cast<std::size_t>(e), 0);
    for (int b : beta.beads()) ++per_runner[static_cast<std::size_t>(b % e)];
    if (*std::min_element(per_runner.begin(), per_runner.end()) >= longest) {
      std::vector<int> beads;
      for (int r = 0; r < e; ++r) {
        const int k = per_runner[static_cast<std::size_t>(r)];
        const Partition& comp = quotient[static_cast<std::size_t>(r)];
        for (int j = 0; j < k; ++j) beads.push_back((comp.row(j) + k - 1 - j) * e + r);
      }
      return BetaSet::from_beads(std::move(beads)).to_partition();
    }
    bead_count += e;
  }
}

std::vector<Partition> quotient_of_tuple(const std::vector<Partition>& tuple, int e) {
  std::vector<Partition> out;
  out.reserve(tuple.size() * static_cast<std::size_t>(e));
  for (const auto& lam : tuple) {
    auto cq = core_and_quotient(lam, e);
    for (auto& q : cq.quotient) out.push_back(std::move(q));
  }
  return out;
}

std::vector<Partition> core_of_tuple(const std::vector<Partition>& tuple, int e) {
  std::vector<Partition> out;
  out.reserve(tuple.size());
  for (const auto& lam : tuple) out.push_back(core(lam, e));
  return out;
}

int total_size(const std::vector<Partition>& tuple) {
  int n = 0;
  for (const auto& lam : tuple) n += lam.size();
  return n;
}

int CoreTower::height() const {
  int h = 0;
  for (int k = 0; k < static_cast<int>(layers.size()); ++k) {
    if (layer_size(k) > 0) h = k + 1;
  }
  return h;
}

int CoreTower::layer_size(int k) const {
  if (k < 0 || k >= static_cast<int>(layers.size())) return 0;
  return total_size(layers[static_cast<std::size_t>(k)]);
}

long long CoreTower::represented_size() const {
  long long n = 0;
  long long scale = 1;
  for (int k = 0; k < static_cast<int>(layers.size()); ++k) {
    n += layer_size(k) * scale;
    scale *= e;
  }
  return n;
}

CoreTower core_tower(const Partition& lam, int e) {
  require_e(e);
  CoreTower tower;
  tower.e = e;
  std::vector<Partition> level{lam};
  while (true) {
    tower.layers.push_back(core_of_tuple(level, e));
    std::vector<Partition> next = quotient_of_tuple(level, e);
    if (total_size(next) == 0) break;
    level = std::move(next);
  }
  return tower;
}

Partition tower_to_partition(const CoreTower& tower) {
  require_e(tower.e);
  if (tower.layers.empty()) return {};
  const int e = tower.e;
  std::size_t expected = 1;
  for (const auto& layer : tower.layers) {
    if (layer.size() != expected) throw DomainError("tower layer has the wrong length");
    for (const auto& entry : layer) {
      if (!is_core(entry, e)) throw DomainError("tower entry " + entry.str() + " is not an e-core");
    }
    expected *= static_cast<std::size_t>(e);
  }
  // Rebuild bottom-up: each entry of layer k absorbs its e children.
  std::vector<Partition> below = tower.layers.back();
  for (std::size_t k = tower.layers.size() - 1; k-- > 0;) {
    const auto& layer = tower.layers[k];
    std::vector<Partition> rebuilt;
    rebuilt.reserve(layer.size());
    for (std::size_t j = 0; j < layer.size(); ++j) {
      std::vector<Partition> children(below.begin() + static_cast<std::ptrdiff_t>(j * e),
                                      below.begin() + static_cast<std::ptrdiff_t>((j + 1) * e));
      rebuilt.push_back(from_core_and_quotient(layer[j], children, e));
    }
    below = std::move(rebuilt);
  }
  return below.front();
}

bool iterated_identity_check(const Partition& lam, int e, int r) {
  require_e(e);
  require_e(r);
  const auto quotient_e = core_and_quotient(lam, e).quotient;
  const auto lhs = core_of_tuple(quotient_e, r);
  const auto rhs = core_and_quotient(core(lam, e * r), e).quotient;
  if (lhs != rhs) return false;
  return total_size(quotient_of_tuple(quotient_e, r)) == weight(lam, e * r);
}

nlohmann::json tower_to_json(const CoreTower& tower) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : tower.layers) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& lam : layer) entries.push_back(lam.str());
    layers.push_back(std::move(entries));
  }
  return {{"e", tower.e}, {"layers", std::move(layers)}};
}

CoreTower tower_from_json(const nlohmann::json& j) {
  CoreTower tower;
  tower.e = j.at("e").get<int>();
  for (const auto& layer : j.at("layers")) {
    std::vector<Partition> entries;
    for (const auto& s : layer) entries.push_back(Partition::parse(s.get<std::string>()));
    tower.layers.push_back(std::move(entries));
  }
  return tower;
}

}  // namespace hookvan
