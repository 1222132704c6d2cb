#include <benchmark/benchmark.h>

#include "hookvan/abacus.hpp"
#include "hookvan/characters.hpp"
#include "hookvan/vanishing.hpp"
#include "hookvan/verify.hpp"

using namespace hookvan;

namespace {

// Full character table of S_n with a fresh session, so the memo starts cold.
void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = partitions_of(n);
  const auto types = cycle_types_of(n);
  for (auto _ : state) {
    CharacterSession s;
    for (const auto& lam : parts) {
      for (const auto& t : types) benchmark::DoNotOptimize(s.value(lam, t));
    }
  }
  state.counters["entries"] = static_cast<double>(parts.size() * types.size());
}
BENCHMARK(BM_CharacterTable)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CoreQuotient(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& lam : parts) benchmark::DoNotOptimize(core_and_quotient(lam, 2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(parts.size()));
}
BENCHMARK(BM_CoreQuotient)->Arg(16)->Arg(24);

void BM_AltProfiles(benchmark::State& state) {
  const auto parts = partitions_of(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CharacterSession s;
    for (const auto& lam : parts) benchmark::DoNotOptimize(profile_alt(lam, 2, s));
  }
}
BENCHMARK(BM_AltProfiles)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.n_max = 14;
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep("S2", cfg));
}
BENCHMARK(BM_Sweep)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
