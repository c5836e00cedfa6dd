#include <benchmark/benchmark.h>

#include <random>

#include "posetcut/generators.hpp"
#include "posetcut/maxcut.hpp"
#include "posetcut/prooftrace.hpp"

namespace {

using namespace posetcut;

void SetRelationCounters(benchmark::State& state, const Poset& p) {
  state.counters["n"] = static_cast<double>(p.size());
  state.counters["m"] = static_cast<double>(p.relation_count());
  // Items = relations, so items_per_second stays flat for a linear algorithm.
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(p.relation_count()));
}

// classify + max_dicut on chain:n; m = n(n-1)/2.
static void BM_TheoremChain(benchmark::State& state) {
  const Poset p = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const Classification cls = classify(p);
    benchmark::DoNotOptimize(max_dicut(p, cls).size);
  }
  SetRelationCounters(state, p);
}
BENCHMARK(BM_TheoremChain)->RangeMultiplier(2)->Range(250, 4000);

// Sparse random orders take the successor-list scan.
static void BM_TheoremRandomSparse(benchmark::State& state) {
  const Poset p =
      random_dag(static_cast<std::size_t>(state.range(0)), 2.0 / state.range(0), 1);
  for (auto _ : state) {
    const Classification cls = classify(p);
    benchmark::DoNotOptimize(max_dicut(p, cls).size);
  }
  SetRelationCounters(state, p);
}
BENCHMARK(BM_TheoremRandomSparse)->RangeMultiplier(2)->Range(500, 8000);

static void BM_BooleanLattice(benchmark::State& state) {
  const Poset p = boolean_lattice(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_dicut(p).size);
  SetRelationCounters(state, p);
}
BENCHMARK(BM_BooleanLattice)->DenseRange(6, 12, 2);

static void BM_BruteForceOracle(benchmark::State& state) {
  const Poset p = random_dag(static_cast<std::size_t>(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_max_cut(p).size);
  state.counters["n"] = static_cast<double>(p.size());
}
BENCHMARK(BM_BruteForceOracle)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

static void BM_LocalSearchFromRandom(benchmark::State& state) {
  const Poset p = random_dag(static_cast<std::size_t>(state.range(0)), 0.1, 5);
  std::uint64_t seed = 0;
  double ratio = 0;
  for (auto _ : state) {
    const Cut c = local_search(p, random_cut(p, seed++));
    ratio = static_cast<double>(c.size) / static_cast<double>(p.relation_count());
  }
  state.counters["ratio"] = ratio;
  SetRelationCounters(state, p);
}
BENCHMARK(BM_LocalSearchFromRandom)->Arg(100)->Arg(300);

static void BM_RunInduction(benchmark::State& state) {
  const Poset p = chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_induction(p).final_cut.size);
  SetRelationCounters(state, p);
}
BENCHMARK(BM_RunInduction)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

// For contrast: a uniformly random cut on a random acyclic digraph that is
// NOT transitively closed. Reports the mean fraction of arcs cut, which sits
// near 1/4; no guarantee is claimed for general DAGs.
static void BM_GeneralDagRandomCut(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(17);
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if ((rng() >> 11) * 0x1.0p-53 < 0.05) arcs.emplace_back(i, j);
  std::vector<bool> bottom(n);
  double cut_fraction_sum = 0;
  std::int64_t rounds = 0;
  for (auto _ : state) {
    for (std::size_t v = 0; v < n; ++v) bottom[v] = rng() >> 63;
    std::size_t cut = 0;
    for (const auto& [x, y] : arcs) cut += bottom[x] && !bottom[y];
    cut_fraction_sum += static_cast<double>(cut) / static_cast<double>(arcs.size());
    ++rounds;
  }
  state.counters["arcs"] = static_cast<double>(arcs.size());
  state.counters["mean_cut_fraction"] = cut_fraction_sum / static_cast<double>(rounds);
}
BENCHMARK(BM_GeneralDagRandomCut)->Arg(400);

}  // namespace
BENCHMARK_MAIN();
