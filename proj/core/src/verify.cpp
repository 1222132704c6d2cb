#include "hookvan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "hookvan/abacus.hpp"
#include "hookvan/blocks.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/errors.hpp"
#include "hookvan/sym_groups.hpp"
#include "hookvan/vanishing.hpp"

namespace hookvan {

using nlohmann::json;

BigInt syt_count_oracle(const Partition& lam, int bound) {
  if (lam.size() > bound) {
    throw DomainError("partition of " + std::to_string(lam.size()) + " exceeds brute-force bound " +
                      std::to_string(bound));
  }
  std::map<Partition, BigInt> memo;
  std::function<BigInt(const Partition&)> count = [&](const Partition& alpha) -> BigInt {
    if (alpha.empty()) return 1;
    if (auto it = memo.find(alpha); it != memo.end()) return it->second;
    BigInt total = 0;
    std::vector<int> parts = alpha.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      // Row i ends in a removable corner iff the next row is strictly shorter.
      if (i + 1 < parts.size() && parts[i + 1] == parts[i]) continue;
      --parts[i];
      std::vector<int> smaller = parts;
      std::erase(smaller, 0);
      total += count(Partition(std::move(smaller)));
      ++parts[i];
    }
    memo.emplace(alpha, total);
    return total;
  };
  return count(lam);
}

std::string SweepReport::to_text() const {
  std::ostringstream out;
  out << theorem << "  n=" << n_min << ".." << n_max;
  if (!primes.empty()) {
    out << "  p={";
    for (std::size_t i = 0; i < primes.size(); ++i) out << (i ? "," : "") << primes[i];
    out << "}";
  }
  out << "  instances=" << instances << "  failures=" << failures.size() << "  time=" << wall_ms << "ms";
  if (partial) out << "  PARTIAL";
  out << "  " << (ok() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << "\n";
  for (const auto& f : failures) out << "  witness " << f.dump() << "\n";
  return out.str();
}

json report_to_json(const SweepReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}});
  return {{"theorem", report.theorem},
          {"n_min", report.n_min},
          {"n_max", report.n_max},
          {"primes", report.primes},
          {"instances", report.instances},
          {"failures", report.failures},
          {"checks", std::move(checks)},
          {"wall_ms", report.wall_ms},
          {"partial", report.partial},
          {"ok", report.ok()}};
}

namespace {

using Clock = std::chrono::steady_clock;

struct WorkerState {
  explicit WorkerState(SessionOptions options) : session(options) {}

  void fail(json witness) { failures.push_back(std::move(witness)); }

  CharacterSession session;
  std::vector<json> failures;
  long long instances = 0;
};

class Ctx {
 public:
  Ctx(const SweepConfig& cfg, SweepReport& report, int n_max, std::vector<int> primes)
      : cfg(cfg), report(report), n_max(n_max), primes(std::move(primes)) {
    if (cfg.time_budget_ms > 0) deadline = Clock::now() + std::chrono::milliseconds(cfg.time_budget_ms);
  }

  bool expired() const { return deadline && Clock::now() > *deadline; }

  // Runs fn(i, state) for i in [0, count) on the configured workers and
  // merges their counts and witnesses into the report.
  template <class F>
  void each(std::size_t count, F&& fn) {
    if (count == 0) return;
    std::size_t workers = cfg.workers > 0 ? static_cast<std::size_t>(cfg.workers)
                                          : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, count);
    std::vector<std::unique_ptr<WorkerState>> states;
    for (std::size_t w = 0; w < workers; ++w) {
      states.push_back(std::make_unique<WorkerState>(SessionOptions{cfg.cache_cap}));
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stopped{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&](WorkerState& state) {
      try {
        for (;;) {
          if (stopped) break;
          const std::size_t i = next++;
          if (i >= count) break;
          if (expired()) {
            stopped = true;
            break;
          }
          fn(i, state);
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stopped = true;
      }
    };
    if (workers == 1) {
      body(*states.front());
    } else {
      std::vector<std::jthread> pool;
      for (auto& s : states) pool.emplace_back([&body, &s] { body(*s); });
    }
    if (error) std::rethrow_exception(error);
    if (stopped) report.partial = true;
    for (auto& s : states) {
      report.instances += s->instances;
      for (auto& f : s->failures) report.failures.push_back(std::move(f));
    }
  }

  const SweepConfig& cfg;
  SweepReport& report;
  int n_max;
  std::vector<int> primes;

 private:
  std::optional<Clock::time_point> deadline;
};

std::vector<Partition> partitions_between(int lo, int hi) {
  std::vector<Partition> out;
  for (int n = lo; n <= hi; ++n) {
    for (auto& lam : partitions_of(n)) out.push_back(std::move(lam));
  }
  return out;
}

// One label per A_n character family: the larger of lam and lam'.
std::vector<Partition> alt_labels_between(int lo, int hi) {
  std::vector<Partition> out;
  for (auto& lam : partitions_between(std::max(lo, 2), hi)) {
    if (lam >= conjugate(lam)) out.push_back(std::move(lam));
  }
  return out;
}

using Item = std::pair<Partition, int>;

std::vector<Item> with_moduli(const std::vector<Partition>& lams, const std::vector<int>& mods) {
  std::vector<Item> out;
  for (const auto& lam : lams) {
    for (int m : mods) out.emplace_back(lam, m);
  }
  return out;
}

json weights_json(const std::map<int, int>& w, int p) {
  json out = json::object();
  for (auto [i, v] : w) out[std::to_string(ipow(p, i))] = v;
  return out;
}

int weight_sum(const std::map<int, int>& w) {
  int total = 0;
  for (auto [i, v] : w) total += v;
  return total;
}

int weight_at(const std::map<int, int>& w, int i) {
  auto it = w.find(i);
  return it == w.end() ? 0 : it->second;
}

std::string big(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------- S_n sweeps

void sweep_determine_weights(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, p] = items[i];
    const auto got = recover_weights_sym(profile_sym(lam, p, st.session));
    const auto want = prime_power_weights(lam, p);
    ++st.instances;
    if (got != want) {
      st.fail({{"lambda", lam.str()}, {"p", p}, {"recovered", weights_json(got, p)},
               {"abacus", weights_json(want, p)}});
    }
  });
}

void sweep_unique_partition(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, p] = items[i];
    for (auto [k, w] : prime_power_weights(lam, p)) {
      const auto t = CycleType::power_cycles(lam.size(), static_cast<int>(ipow(p, k)), w);
      ++st.instances;
      if (st.session.value(lam, t) == 0) st.fail({{"lambda", lam.str()}, {"type", t.str()}});
    }
  });
}

BigInt multinomial(const std::vector<Partition>& parts) {
  BigInt out = factorial(total_size(parts));
  for (const auto& q : parts) out /= factorial(q.size());
  return out;
}

void sweep_weight_minus_one(Ctx& c) {
  const auto lams = partitions_between(1, c.n_max);
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    const auto& lam = lams[i];
    for (auto [l, w] : prime_power_weights(lam, 2)) {
      const int e = static_cast<int>(ipow(2, l));
      if (w % 2 == 1) {
        const auto t = CycleType::power_cycles(lam.size(), e, w - 1);
        ++st.instances;
        if (st.session.value(lam, t) == 0) st.fail({{"lambda", lam.str()}, {"type", t.str()}});
      }
      if (w > 0) {
        // Paths down to the core: choose the order of components, then a
        // standard tableau for each of them.
        const CoreQuotient cq = core_and_quotient(lam, e);
        BigInt expected = multinomial(cq.quotient);
        for (const auto& q : cq.quotient) expected *= degree(q);
        const BigInt got = path_count(lam, cq.core, e);
        ++st.instances;
        if (got != expected) {
          st.fail({{"lambda", lam.str()}, {"e", e}, {"paths", big(got)}, {"expected", big(expected)}});
        }
      }
    }
  });
}

void sweep_s1(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, p] = items[i];
    const auto w = recover_weights_sym(profile_sym(lam, p, st.session));
    const int sum = weight_sum(w);
    const int nu = legendre(lam.size(), p) - sum;
    const int defect = legendre(p * weight_at(w, 1), p);
    const int height = defect - sum;
    const BlockData block = block_data_sym(lam, p);
    const int nu_true = valuation(degree(lam), p);
    ++st.instances;
    if (nu != nu_true || defect != block.defect || height != block.height ||
        block.sylow_log - block.defect + block.height != nu_true) {
      st.fail({{"lambda", lam.str()}, {"p", p},
               {"from_profile", {{"nu", nu}, {"defect", defect}, {"height", height}}},
               {"true", {{"nu", nu_true}, {"defect", block.defect}, {"height", block.height}}}});
    }
  });
}

// Per-label data for the pairwise sweeps.
struct Record {
  Partition lam;
  int p = 0;
  std::set<CycleType> zeros;
  BigInt quantity;
  Partition block;
};

using RecordFn = std::function<void(Record&, WorkerState&)>;
using PairFn = std::function<void(const Record&, const Record&, WorkerState&)>;

// Fills one record per (label, modulus), then visits every ordered pair of
// distinct records with the same n and modulus (and block, if asked).
void pair_sweep(Ctx& c, const std::vector<Item>& items, const RecordFn& fill, bool same_block,
                const PairFn& check) {
  std::vector<Record> records(items.size());
  {
    // Filling does not count as instances.
    SweepReport scratch;
    Ctx inner(c.cfg, scratch, c.n_max, c.primes);
    inner.each(items.size(), [&](std::size_t i, WorkerState& st) {
      records[i].lam = items[i].first;
      records[i].p = items[i].second;
      fill(records[i], st);
    });
    if (scratch.partial) {
      c.report.partial = true;
      return;
    }
  }
  std::map<std::pair<int, int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < records.size(); ++i) {
    groups[{records[i].lam.size(), records[i].p}].push_back(i);
  }
  c.each(records.size(), [&](std::size_t a, WorkerState& st) {
    const Record& ra = records[a];
    for (std::size_t b : groups[{ra.lam.size(), ra.p}]) {
      if (b == a) continue;
      const Record& rb = records[b];
      if (same_block && ra.block != rb.block) continue;
      ++st.instances;
      check(ra, rb, st);
    }
  });
}

bool contained(const std::set<CycleType>& a, const std::set<CycleType>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

json pair_witness(const Record& a, const Record& b) {
  json out = {{"lambda", a.lam.str()}, {"mu", b.lam.str()}, {"lambda_value", big(a.quantity)},
              {"mu_value", big(b.quantity)}};
  if (a.p) out["p"] = a.p;
  return out;
}

// a inside b must give quantity(a) <= quantity(b) * factor.
PairFn containment_bound(long factor) {
  return [factor](const Record& a, const Record& b, WorkerState& st) {
    if (contained(a.zeros, b.zeros) && a.quantity > b.quantity * factor) st.fail(pair_witness(a, b));
  };
}

// Containment bound with an additive slack on valuations.
PairFn containment_bound_additive(std::function<int(const Record&)> slack) {
  return [slack](const Record& a, const Record& b, WorkerState& st) {
    if (contained(a.zeros, b.zeros) && a.quantity > b.quantity + slack(a)) st.fail(pair_witness(a, b));
  };
}

void sweep_s2(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        r.zeros = profile_sym(r.lam, r.p, st.session).zero_types;
        r.quantity = valuation(degree(r.lam), r.p);
      },
      false, containment_bound_additive([](const Record&) { return 0; }));
}

void sweep_s3(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), {0});
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        r.zeros = van_pow(r.lam, GroupKind::Sym, st.session);
        r.quantity = degree(r.lam);
      },
      false, containment_bound(1));
}

void sweep_s4(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        const BlockData block = block_data_sym(r.lam, r.p);
        r.zeros = restrict_to_support(profile_sym(r.lam, r.p, st.session), r.p * block.weight).zero_types;
        r.quantity = block.height;
        r.block = block.core;
      },
      true, containment_bound_additive([](const Record&) { return 0; }));
}

// ---------------------------------------------------------------- A_n sweeps

void sweep_a1(Ctx& c) {
  const auto items = with_moduli(alt_labels_between(2, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, p] = items[i];
    const VanishingProfile profile = profile_alt(lam, p, st.session);
    const BlockData block = block_data_alt(lam, p);
    const int nu_true = valuation(alt_degree(lam), p);
    ++st.instances;
    json truth = {{"nu", nu_true}, {"defect", block.defect}, {"height", block.height}};
    if (p == 2) {
      const AltDataReport report = determine_alt_data(estimate_weights_alt(profile), lam.size());
      if (!report.nu_degree.admits(nu_true) || !report.defect.admits(block.defect) ||
          !report.height.admits(block.height)) {
        st.fail({{"lambda", lam.str()}, {"p", p}, {"report", alt_report_to_json(report)}, {"true", truth}});
      }
      return;
    }
    const auto w = recover_weights_sym(profile);
    const int sum = weight_sum(w);
    const int nu = legendre(lam.size(), p) - sum;
    const int defect = legendre(p * weight_at(w, 1), p);
    const int height = defect - sum;
    if (nu != nu_true || defect != block.defect || height != block.height) {
      st.fail({{"lambda", lam.str()}, {"p", p},
               {"from_profile", {{"nu", nu}, {"defect", defect}, {"height", height}}}, {"true", truth}});
    }
  });
}

void sweep_a2(Ctx& c) {
  const auto items = with_moduli(alt_labels_between(2, c.n_max), c.primes);
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        r.zeros = profile_alt(r.lam, r.p, st.session).zero_types;
        r.quantity = valuation(alt_degree(r.lam), r.p);
      },
      false, containment_bound_additive([](const Record& r) { return r.p == 2 ? 1 : 0; }));
}

void sweep_a3(Ctx& c) {
  const auto items = with_moduli(alt_labels_between(2, c.n_max), {0});
  const PairFn bound = containment_bound(2);
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        r.zeros = van_pow(r.lam, GroupKind::Alt, st.session);
        r.quantity = alt_degree(r.lam);
      },
      false, [bound](const Record& a, const Record& b, WorkerState& st) {
        bound(a, b, st);
        if (a.zeros == b.zeros && a.quantity >= b.quantity && a.quantity != b.quantity &&
            a.quantity != 2 * b.quantity) {
          st.fail(pair_witness(a, b));
        }
      });
}

void sweep_a4(Ctx& c) {
  const auto items = with_moduli(alt_labels_between(2, c.n_max), c.primes);
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        const BlockData block = block_data_alt(r.lam, r.p);
        r.zeros = restrict_to_support(profile_alt(r.lam, r.p, st.session), r.p * block.weight).zero_types;
        r.quantity = block.height;
        // For odd p the A_n block is shared by the S_n blocks of a core and
        // of its conjugate.
        r.block = r.p == 2 ? block.core : std::min(block.core, conjugate(block.core));
      },
      true, containment_bound_additive([](const Record& r) { return r.p == 2 ? 1 : 0; }));
}

// Both estimator variants for one label, against the abacus weights.
struct EstimateCase {
  WeightEstimates est;
  std::map<int, int> w;
};

std::vector<EstimateCase> estimate_cases(const Partition& lam, CharacterSession& session) {
  const VanishingProfile profile = profile_alt(lam, 2, session);
  const auto w = prime_power_weights(lam, 2);
  return {{estimate_weights_alt(profile, true), w}, {estimate_weights_alt(profile, false), w}};
}

json estimate_witness(const Partition& lam, const EstimateCase& ec, std::string_view what) {
  return {{"lambda", lam.str()}, {"check", what}, {"estimates", estimates_to_json(ec.est)},
          {"weights", weights_json(ec.w, 2)}};
}

void sweep_weight_estimates(Ctx& c) {
  const auto lams = alt_labels_between(2, c.n_max);
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    for (const auto& ec : estimate_cases(lams[i], st.session)) {
      ++st.instances;
      std::vector<int> odd;
      for (auto [k, w] : ec.w) {
        const int hat = ec.est.at(k);
        if (hat > w) st.fail(estimate_witness(lams[i], ec, "upper bound"));
        if (w % 2 == 0 && hat != w) st.fail(estimate_witness(lams[i], ec, "even weight exact"));
        if (w % 2 == 1 && hat < w - 1) st.fail(estimate_witness(lams[i], ec, "odd weight within one"));
        if (w % 2 == 1) odd.push_back(k);
      }
      if (odd.size() >= 2) {
        for (int k : odd) {
          if (ec.est.at(k) != weight_at(ec.w, k)) {
            st.fail(estimate_witness(lams[i], ec, "two odd weights exact"));
          }
        }
      }
    }
  });
}

void sweep_alt_determine_weights(Ctx& c) {
  const auto lams = alt_labels_between(2, c.n_max);
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    for (const auto& ec : estimate_cases(lams[i], st.session)) {
      ++st.instances;
      int off = 0;
      for (auto [k, w] : ec.w) {
        const int hat = ec.est.at(k);
        if (w != hat && w != hat + 1) st.fail(estimate_witness(lams[i], ec, "two options"));
        if (w == hat + 1) ++off;
        if (ec.est.any_odd() && w != hat) st.fail(estimate_witness(lams[i], ec, "odd estimate forces exact"));
      }
      if (off > 1) st.fail(estimate_witness(lams[i], ec, "at most one index off"));
    }
  });
}

void sweep_alt_determine_data(Ctx& c) {
  const auto lams = alt_labels_between(2, c.n_max);
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    const Partition& lam = lams[i];
    const int n = lam.size();
    const bool sc = is_self_conjugate(lam);
    const BlockData block = block_data_alt(lam, 2);
    const int nu_true = valuation(alt_degree(lam), 2);
    for (const auto& ec : estimate_cases(lam, st.session)) {
      ++st.instances;
      const WeightEstimates& est = ec.est;
      bool exact_all = true;
      bool exact_above_two = true;
      for (auto [k, w] : ec.w) {
        if (est.at(k) != w) {
          exact_all = false;
          if (k >= 2) exact_above_two = false;
        }
      }
      const int w2_hat = est.at(1);
      const int nu = exact_all && !sc ? est.nu_hat : est.nu_hat - 1;
      const int defect = (w2_hat == weight_at(ec.w, 1) || w2_hat == 0) ? est.d_hat : est.d_hat + 1;
      const int height = (w2_hat > 0 && exact_above_two && !sc) ? est.h_hat : est.h_hat - 1;
      const AltDataReport report = determine_alt_data(est, n);
      if (nu != nu_true || defect != block.defect || height != block.height ||
          !report.nu_degree.admits(nu_true) || !report.defect.admits(block.defect) ||
          !report.height.admits(block.height)) {
        st.fail({{"lambda", lam.str()},
                 {"improved", est.improved},
                 {"case_formulas", {{"nu", nu}, {"defect", defect}, {"height", height}}},
                 {"true", {{"nu", nu_true}, {"defect", block.defect}, {"height", block.height}}},
                 {"report", alt_report_to_json(report)}});
      }
    }
  });
}

void sweep_final_proposition(Ctx& c) {
  const auto items = with_moduli(alt_labels_between(2, c.n_max), {2});
  pair_sweep(
      c, items,
      [](Record& r, WorkerState& st) {
        r.zeros = profile_alt(r.lam, 2, st.session).zero_types;
        r.quantity = valuation(alt_degree(r.lam), 2);
        r.block = core(r.lam, 2);
      },
      false, [](const Record& a, const Record& b, WorkerState& st) {
        if (a.zeros != b.zeros || a.block == b.block || a.quantity == b.quantity) return;
        if (is_self_conjugate(a.lam) || is_self_conjugate(b.lam)) st.fail(pair_witness(a, b));
      });
}

std::vector<int> diagonal_hooks(const Partition& lam) {
  std::vector<int> out;
  for (int i = 1; contains_node(lam, Node{i, i}); ++i) out.push_back(hook_length(lam, Node{i, i}));
  return out;
}

void sweep_an_vanishing(Ctx& c) {
  const auto lams = alt_labels_between(2, c.n_max);
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    const Partition& lam = lams[i];
    const int n = lam.size();
    const bool sc = is_self_conjugate(lam);
    std::vector<CharacterId> chars;
    if (sc) {
      chars = {CharacterId::alt(lam, AltBranch::Plus), CharacterId::alt(lam, AltBranch::Minus)};
    } else {
      chars = {CharacterId::alt(lam)};
    }
    // 2-power classes never split, so every value is available.
    for (const auto& t : profile_universe(GroupContext{n, GroupKind::Alt, 2})) {
      const bool zero = st.session.value(lam, t) == 0;
      for (const auto& chi : chars) {
        ++st.instances;
        const AltValue v = value_alt(chi, t, st.session);
        const BigInt* got = std::get_if<BigInt>(&v);
        if (!got || (*got == 0) != zero) st.fail({{"lambda", lam.str()}, {"type", t.str()}});
      }
    }
    if (!sc) return;
    // Off the class of diagonal hook lengths the two constituents take
    // chi^lam / 2 on split classes. On that class they are nonzero because
    // chi^lam there is the sign (-1)^((n - d)/2), d the number of diagonal hooks.
    const auto hooks = diagonal_hooks(lam);
    const CycleType diagonal{Partition(hooks)};
    ++st.instances;
    const BigInt v = st.session.value(lam, diagonal);
    const int expected = ((n - static_cast<int>(hooks.size())) / 2) % 2 ? -1 : 1;
    if (!splits_in_alt(diagonal) || v != expected) {
      st.fail({{"lambda", lam.str()}, {"diagonal_type", diagonal.str()}, {"value", big(v)}});
    }
  });
}

// ---------------------------------------------------------------- combinatorics

struct Reach {
  std::set<int> signs;
  BigInt paths = 0;
};

void sweep_path_sign(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, e] = items[i];
    // Every path enumerated on the diagram, with sign parities collected.
    std::map<Partition, std::map<Partition, Reach>> memo;
    std::function<const std::map<Partition, Reach>&(const Partition&)> walk =
        [&](const Partition& alpha) -> const std::map<Partition, Reach>& {
      if (auto it = memo.find(alpha); it != memo.end()) return it->second;
      std::map<Partition, Reach> out;
      out[alpha] = Reach{{0}, 1};
      for (const Hook& h : hooks_of_length(alpha, e)) {
        const HookRemoval step = remove_hook(alpha, h.corner);
        for (const auto& [mu, r] : walk(step.rest)) {
          Reach& slot = out[mu];
          for (int s : r.signs) slot.signs.insert((s + step.leg) % 2);
          slot.paths += r.paths;
        }
      }
      return memo.emplace(alpha, std::move(out)).first->second;
    };
    const auto& reach = walk(lam);
    for (int k = 1; k * e <= lam.size(); ++k) {
      for (const auto& mu : partitions_of(lam.size() - k * e)) {
        ++st.instances;
        const auto sign = sign_between(lam, mu, e);
        const auto it = reach.find(mu);
        const BigInt paths = path_count(lam, mu, e);
        json witness = {{"lambda", lam.str()}, {"mu", mu.str()}, {"e", e}};
        if (it == reach.end()) {
          if (sign || paths != 0) st.fail(witness);
          continue;
        }
        const int expected = *it->second.signs.begin() ? -1 : 1;
        if (it->second.signs.size() != 1 || !sign || *sign != expected || paths != it->second.paths) {
          st.fail(witness);
        }
      }
    }
  });
}

void sweep_quotient_hooks(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, e] = items[i];
    std::vector<int> lhs;
    for (int h : hook_multiset(lam)) {
      if (h % e == 0) lhs.push_back(h / e);
    }
    std::vector<int> rhs;
    for (const auto& q : core_and_quotient(lam, e).quotient) {
      for (int h : hook_multiset(q)) rhs.push_back(h);
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    ++st.instances;
    if (lhs != rhs || weight(lam, e) != weight_by_hooks(lam, e)) {
      st.fail({{"lambda", lam.str()}, {"e", e}, {"scaled_hooks", lhs}, {"quotient_hooks", rhs}});
    }
  });
}

void sweep_iterated(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, e] = items[i];
    for (int r : {2, 3}) {
      ++st.instances;
      if (!iterated_identity_check(lam, e, r)) st.fail({{"lambda", lam.str()}, {"e", e}, {"r", r}});
    }
  });
}

void sweep_tower_sizes(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, e] = items[i];
    const int n = lam.size();
    const CoreTower tower = core_tower(lam, e);
    ++st.instances;
    json witness = {{"lambda", lam.str()}, {"e", e}, {"tower", tower_to_json(tower)}};
    auto w = [&](int k) -> long long {
      if (k == 0) return n;
      const long long len = ipow(e, k);
      return len > n ? 0 : weight(lam, static_cast<int>(len));
    };
    long long layer_total = 0;
    for (int k = 0; k <= tower.height() + 1; ++k) {
      layer_total += tower.layer_size(k);
      if (tower.layer_size(k) != w(k) - e * w(k + 1)) st.fail(witness);
    }
    if (tower.represented_size() != n || tower_to_partition(tower) != lam) st.fail(witness);
    if (is_prime(e) && n > 0 &&
        valuation(degree(lam), e) * (e - 1) != layer_total - digit_sum(n, e)) {
      st.fail(witness);
    }
  });
}

void sweep_tower_conjugation(Ctx& c) {
  const auto items = with_moduli(partitions_between(1, c.n_max), c.primes);
  c.each(items.size(), [&](std::size_t i, WorkerState& st) {
    const auto& [lam, e] = items[i];
    const CoreTower tower = core_tower(lam, e);
    CoreTower expected = tower;
    for (auto& layer : expected.layers) {
      for (auto& entry : layer) entry = conjugate(entry);
      std::reverse(layer.begin(), layer.end());
    }
    ++st.instances;
    json witness = {{"lambda", lam.str()}, {"e", e}};
    if (core_tower(conjugate(lam), e) != expected) st.fail(witness);
    if (e % 2 == 0 && is_self_conjugate(lam)) {
      for (int k = 1; k <= tower.height(); ++k) {
        if (tower.layer_size(k) % 2) st.fail(witness);
      }
    }
  });
}

void sweep_orthogonality(Ctx& c) {
  std::vector<int> ns;
  for (int n = 0; n <= c.n_max; ++n) ns.push_back(n);
  c.each(ns.size(), [&](std::size_t i, WorkerState& st) {
    const int n = ns[i];
    const auto lams = partitions_of(n);
    const auto types = cycle_types_of(n);
    std::vector<std::vector<BigInt>> table;
    for (const auto& lam : lams) {
      std::vector<BigInt> row;
      for (const auto& t : types) row.push_back(st.session.value(lam, t));
      table.push_back(std::move(row));
    }
    std::vector<BigInt> sizes;
    for (const auto& t : types) sizes.push_back(class_size(t));
    const BigInt order = factorial(n);
    for (std::size_t a = 0; a < lams.size(); ++a) {
      for (std::size_t b = a; b < lams.size(); ++b) {
        BigInt sum = 0;
        for (std::size_t k = 0; k < types.size(); ++k) sum += sizes[k] * table[a][k] * table[b][k];
        ++st.instances;
        if (sum != (a == b ? order : BigInt(0))) {
          st.fail({{"n", n}, {"rows", {lams[a].str(), lams[b].str()}}, {"inner", big(sum)}});
        }
      }
    }
    for (std::size_t k = 0; k < types.size(); ++k) {
      for (std::size_t l = k; l < types.size(); ++l) {
        BigInt sum = 0;
        for (std::size_t a = 0; a < lams.size(); ++a) sum += table[a][k] * table[a][l];
        ++st.instances;
        if (sum * sizes[k] != (k == l ? order : BigInt(0))) {
          st.fail({{"n", n}, {"columns", {types[k].str(), types[l].str()}}, {"inner", big(sum)}});
        }
      }
    }
  });
}

void sweep_hlf_syt(Ctx& c) {
  const auto lams = partitions_between(0, std::min(c.n_max, c.cfg.brute_force_bound));
  c.each(lams.size(), [&](std::size_t i, WorkerState& st) {
    ++st.instances;
    const BigInt syt = syt_count_oracle(lams[i], c.cfg.brute_force_bound);
    if (degree(lams[i]) != syt) st.fail({{"lambda", lams[i].str()}, {"syt", big(syt)}});
  });
}

void sweep_class_sizes(Ctx& c) {
  std::vector<int> ns;
  for (int n = 1; n <= c.n_max; ++n) ns.push_back(n);
  c.each(ns.size(), [&](std::size_t i, WorkerState& st) {
    const int n = ns[i];
    BigInt total = 0;
    BigInt even = 0;
    int split = 0;
    for (const auto& t : cycle_types_of(n)) {
      const BigInt size = class_size(t);
      total += size;
      if (is_even_type(t)) even += size;
      if (splits_in_alt(t)) ++split;
    }
    int self_conjugate = 0;
    for (const auto& lam : partitions_of(n)) self_conjugate += is_self_conjugate(lam);
    ++st.instances;
    const BigInt order = factorial(n);
    // Split classes of A_n correspond to its split characters.
    const bool ok = total == order && (n < 2 || even * 2 == order) && (n < 2 ? split == 0 : split == self_conjugate);
    if (!ok) st.fail({{"n", n}, {"total", big(total)}, {"even", big(even)}, {"split", split}});
  });
}

struct SweepSpec {
  std::string id;
  SweepDefaults defaults;
  int n_min;
  bool uses_moduli;
  std::function<void(Ctx&)> run;
};

const std::vector<SweepSpec>& sweep_table() {
  static const std::vector<SweepSpec> table = {
      {"S1", {14, {2, 3, 5, 7}}, 1, true, sweep_s1},
      {"S2", {12, {2, 3}}, 1, true, sweep_s2},
      {"S3", {12, {}}, 1, false, sweep_s3},
      {"S4", {12, {2, 3}}, 1, true, sweep_s4},
      {"A1", {14, {2, 3, 5}}, 2, true, sweep_a1},
      {"A2", {12, {2, 3}}, 2, true, sweep_a2},
      {"A3", {12, {}}, 2, false, sweep_a3},
      {"A4", {12, {2, 3}}, 2, true, sweep_a4},
      {"determine_weights", {16, {2, 3, 5, 7}}, 1, true, sweep_determine_weights},
      {"weight_minus_one", {16, {2}}, 1, false, sweep_weight_minus_one},
      {"path-sign", {10, {2, 3}}, 1, true, sweep_path_sign},
      {"quotient-hooks", {14, {2, 3, 4, 5}}, 1, true, sweep_quotient_hooks},
      {"iterated", {14, {2, 3}}, 1, true, sweep_iterated},
      {"weights-to-tower-sizes", {16, {2, 3}}, 1, true, sweep_tower_sizes},
      {"An-vanishing", {16, {2}}, 2, false, sweep_an_vanishing},
      {"weight-estimates", {16, {2}}, 2, false, sweep_weight_estimates},
      {"alt-determine-weights", {16, {2}}, 2, false, sweep_alt_determine_weights},
      {"alt-determine-data", {16, {2}}, 2, false, sweep_alt_determine_data},
      {"final-proposition", {14, {2}}, 2, false, sweep_final_proposition},
      {"unique_partition", {14, {2, 3, 5, 7}}, 1, true, sweep_unique_partition},
      {"tower-conjugation", {14, {2, 3}}, 1, true, sweep_tower_conjugation},
      {"orthogonality", {8, {}}, 0, false, sweep_orthogonality},
      {"hlf-syt", {8, {}}, 0, false, sweep_hlf_syt},
      {"class-sizes", {12, {}}, 1, false, sweep_class_sizes},
  };
  return table;
}

const SweepSpec& find_sweep(std::string_view id) {
  for (const auto& s : sweep_table()) {
    if (s.id == id) return s;
  }
  throw DomainError("unknown sweep '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& sweep_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& s : sweep_table()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

SweepDefaults sweep_defaults(std::string_view id) { return find_sweep(id).defaults; }

namespace {

void finish(SweepReport& report, Clock::time_point start) {
  std::sort(report.failures.begin(), report.failures.end(),
            [](const json& a, const json& b) { return a.dump() < b.dump(); });
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

}  // namespace

SweepReport run_sweep(std::string_view id, const SweepConfig& config) {
  const SweepSpec& spec = find_sweep(id);
  if (config.n_max && *config.n_max < 0) throw DomainError("n_max must be non-negative");
  if (config.brute_force_bound < 1) throw DomainError("brute-force bound must be positive");
  const auto start = Clock::now();
  SweepReport report;
  report.theorem = spec.id;
  report.n_min = spec.n_min;
  report.n_max = config.n_max.value_or(spec.defaults.n_max);
  report.primes = spec.defaults.primes;
  if (spec.uses_moduli && config.primes) report.primes = *config.primes;
  for (int m : report.primes) {
    if (m < 2) throw DomainError("moduli must be at least 2");
  }
  Ctx ctx(config, report, report.n_max, report.primes);
  spec.run(ctx);
  finish(report, start);
  return report;
}

std::string_view self_conjugacy_name(SelfConjugacy s) {
  switch (s) {
    case SelfConjugacy::Neither: return "neither";
    case SelfConjugacy::Both: return "both";
    case SelfConjugacy::ExactlyOne: return "exactly one";
  }
  return "neither";
}

const std::vector<TableRow>& table_rows() {
  using P = Partition;
  static const std::vector<TableRow> rows = {
      {"equal data, neither self-conjugate", P{4}, P{3, 1}, 0, 0, 0, SelfConjugacy::Neither, true},
      {"equal data, both self-conjugate", P{4, 2, 1, 1}, P{3, 3, 2}, 0, 0, 0, SelfConjugacy::Both, true},
      {"equal data, one self-conjugate", P{4}, P{2, 2}, 0, 0, 0, SelfConjugacy::ExactlyOne, true},
      {"2-part and height differ, neither self-conjugate", P{13, 1, 1, 1, 1}, P{9, 3, 3, 2}, 1, 0, 1,
       SelfConjugacy::Neither, false},
      {"2-part and height differ, one self-conjugate", P{9, 6, 3}, P{7, 4, 2, 2, 1, 1, 1}, 1, 0, 1,
       SelfConjugacy::ExactlyOne, true},
      {"defect and height differ, neither self-conjugate", P{5, 2}, P{6, 1}, 0, 1, 1,
       SelfConjugacy::Neither, false},
      {"defect and height differ, one self-conjugate", P{3}, P{2, 1}, 0, 1, 1, SelfConjugacy::ExactlyOne,
       false},
      {"2-part and defect differ, neither self-conjugate", P{7, 4, 2, 2}, P{3, 3, 2, 2, 2, 1, 1, 1}, 1, 1, 0,
       SelfConjugacy::Neither, false},
  };
  return rows;
}

PairSignature alt_pair_signature(const Partition& lam, const Partition& mu) {
  if (lam.size() != mu.size()) throw DomainError("partitions of different sizes");
  CharacterSession session;
  PairSignature out;
  out.equal_profiles = profile_alt(lam, 2, session).zero_types == profile_alt(mu, 2, session).zero_types;
  const BlockData a = block_data_alt(lam, 2);
  const BlockData b = block_data_alt(mu, 2);
  out.d_nu = std::abs(valuation(alt_degree(lam), 2) - valuation(alt_degree(mu), 2));
  out.d_defect = std::abs(a.defect - b.defect);
  out.d_height = std::abs(a.height - b.height);
  const int sc = int{is_self_conjugate(lam)} + int{is_self_conjugate(mu)};
  out.pattern = sc == 0 ? SelfConjugacy::Neither : sc == 2 ? SelfConjugacy::Both : SelfConjugacy::ExactlyOne;
  return out;
}

namespace {

Partition staircase(int r) {
  std::vector<int> parts;
  for (int k = r; k >= 1; --k) parts.push_back(k);
  return Partition(std::move(parts));
}

}  // namespace

Partition enlarge_two_core(const Partition& lam) {
  CoreTower tower = core_tower(lam, 2);
  Partition& root = tower.layers.front().front();
  root = staircase(root.length() + 1);
  return tower_to_partition(tower);
}

std::pair<Partition, Partition> converse_pair_two(int r) {
  if (r < 0) throw DomainError("r must be non-negative");
  const Partition one{1};
  const Partition none;
  CoreTower lam{2, {{staircase(r)}, {none, none}, {one, one, none, none}}};
  CoreTower mu{2, {{staircase(r)}, {none, none}, {one, none, none, one}}};
  return {tower_to_partition(lam), tower_to_partition(mu)};
}

std::pair<Partition, Partition> converse_pair_odd(int p) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  return {Partition{p * (p - 1), p - 1, 1}, Partition{p * (p - 1), p}};
}

SweepReport reproduce_examples(const SweepConfig& config) {
  const auto start = Clock::now();
  SweepReport report;
  report.theorem = "examples";
  CharacterSession session(SessionOptions{config.cache_cap});
  auto check = [&](std::string name, bool passed, json witness = nullptr) {
    ++report.instances;
    report.checks.push_back({name, passed});
    if (!passed) {
      if (witness.is_null()) witness = json::object();
      witness["example"] = name;
      report.failures.push_back(std::move(witness));
    }
  };
  auto value_of = [&](const char* lam, const char* t) {
    return session.value(Partition::parse(lam), CycleType::parse(t));
  };

  check("value (6,2,1) at (3,3,1,1,1) is -3", value_of("6,2,1", "3,3,1,1,1") == -3);
  check("value (6,3) at (3,3,1,1,1) is 0", value_of("6,3", "3,3,1,1,1") == 0);
  check("value (2,2) at (2,1,1) is 0", value_of("2,2", "2,1,1") == 0);

  {
    const Partition lam{9, 8, 6, 5, 1};
    const HookRemoval r = remove_hook(lam, Node{2, 3});
    check("removing the (2,3) hook of (9,8,6,5,1) leaves (9,5,4,2,1)",
          hook_length(lam, Node{2, 3}) == 8 && r.rest == Partition{9, 5, 4, 2, 1},
          {{"rest", r.rest.str()}});
  }
  {
    const CoreTower tower = core_tower(Partition{5, 3, 3, 3, 1}, 2);
    const CoreTower expected{2, {{Partition{1}}, {Partition{2, 1}, Partition{}},
                                 {Partition{}, Partition{}, Partition{1}, Partition{1}}}};
    check("2-core tower of (5,3,3,3,1)", tower == expected, {{"tower", tower_to_json(tower)}});
  }

  {
    const Partition a{6, 4};
    const Partition b{6, 2, 1, 1};
    const auto za = profile_sym(a, 2, session).zero_types;
    const auto zb = profile_sym(b, 2, session).zero_types;
    const auto rel = compare_sets(za, zb);
    const bool proper = rel == ProfileRelation::Subset || rel == ProfileRelation::Superset;
    check("(6,4) and (6,2,1,1): proper containment of 2-profiles with equal 2-parts",
          proper && valuation(degree(a), 2) == valuation(degree(b), 2),
          {{"relation", relation_name(rel)}});
  }
  {
    const Partition a{6, 3, 3, 2};
    const Partition b{5, 5, 2, 1, 1};
    check("(6,3,3,2) and (5,5,2,1,1): equal prime-power zeros",
          van_pow(a, GroupKind::Sym, session) == van_pow(b, GroupKind::Sym, session));
    const BigInt da = degree(a);
    const BigInt db = degree(b);
    check("(6,3,3,2) and (5,5,2,1,1): equal degrees, hook formula against MN at the identity",
          da == db && session.value(a, CycleType::identity(14)) == da &&
              session.value(b, CycleType::identity(14)) == db,
          {{"degree", da.str()}});
    check("(6,3,3,2) and (5,5,2,1,1): not related by a linear character", !linear_twist_equivalent(a, b));
  }
  {
    const Partition a{10, 4, 3};
    const Partition b{7, 2, 2, 2, 2, 2};
    check("(10,4,3) and (7,2,2,2,2,2): equal prime-power zeros in A_17",
          van_pow(a, GroupKind::Alt, session) == van_pow(b, GroupKind::Alt, session));
    check("(10,4,3) and (7,2,2,2,2,2): degree ratio exactly 2",
          alt_degree(b) == 2 * alt_degree(a) && degree(b) == 2 * degree(a));
  }

  for (int p : {3, 5}) {
    const auto [lam, mu] = converse_pair_odd(p);
    const std::string tag = "odd converse family, p = " + std::to_string(p) + ": ";
    const auto t = CycleType::power_cycles(p * p, p, p - 1);
    const BigInt binom = BigInt(p) * (p - 1) / 2;
    const BigInt vl = session.value(lam, t);
    const BigInt vm = session.value(mu, t);
    check(tag + "values -C(p,2) and 0", vl == -binom && vm == 0, {{"lambda", big(vl)}, {"mu", big(vm)}});
    check(tag + "equal weights, p-parts and heights",
          prime_power_weights(lam, p) == prime_power_weights(mu, p) &&
              valuation(degree(lam), p) == valuation(degree(mu), p) &&
              block_data_sym(lam, p).height == block_data_sym(mu, p).height);
    check(tag + "profiles differ",
          profile_sym(lam, p, session).zero_types != profile_sym(mu, p, session).zero_types);
  }

  for (int r : {2, 3, 4}) {
    const auto [lam, mu] = converse_pair_two(r);
    const std::string tag = "p = 2 converse family, r = " + std::to_string(r) + ": ";
    const int n = lam.size();
    const auto transposition = CycleType::power_cycles(n, 2, 1);
    check(tag + "n = T_r + 8 and equal 2-power weights",
          n == r * (r + 1) / 2 + 8 && prime_power_weights(lam, 2) == prime_power_weights(mu, 2),
          {{"lambda", lam.str()}, {"mu", mu.str()}});
    check(tag + "equal 2-parts and heights",
          valuation(degree(lam), 2) == valuation(degree(mu), 2) &&
              block_data_sym(lam, 2).height == block_data_sym(mu, 2).height);
    check(tag + "lambda nonzero on transpositions, mu self-conjugate and zero",
          session.value(lam, transposition) != 0 && is_self_conjugate(mu) &&
              session.value(mu, transposition) == 0);
  }

  for (const auto& row : table_rows()) {
    auto signature_matches = [&](const Partition& lam, const Partition& mu) {
      const PairSignature s = alt_pair_signature(lam, mu);
      const bool ok = s.equal_profiles && s.d_nu == row.d_nu && s.d_defect == row.d_defect &&
                      s.d_height == row.d_height && s.pattern == row.pattern;
      json witness = {{"lambda", lam.str()},
                      {"mu", mu.str()},
                      {"equal_profiles", s.equal_profiles},
                      {"differences", {s.d_nu, s.d_defect, s.d_height}},
                      {"self_conjugacy", self_conjugacy_name(s.pattern)}};
      return std::pair{ok, witness};
    };
    auto [ok, witness] = signature_matches(row.lam, row.mu);
    check("table: " + row.lam.str() + " / " + row.mu.str() + " (" + row.name + ")", ok, witness);
    if (row.family) {
      const Partition lam = enlarge_two_core(row.lam);
      const Partition mu = enlarge_two_core(row.mu);
      auto [big_ok, big_witness] = signature_matches(lam, mu);
      check("table, larger 2-core: " + lam.str() + " / " + mu.str(), big_ok, big_witness);
    }
  }

  finish(report, start);
  return report;
}

}  // namespace hookvan
