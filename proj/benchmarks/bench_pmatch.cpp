#include <benchmark/benchmark.h>

#include "random.hpp"

using namespace pmatch;
using namespace pmatch::testing;

static void BM_Diagram(benchmark::State& state) {
  Rng rng(1);
  const PersistenceModule v = random_module(rng, static_cast<Index>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(diagram(v));
}
BENCHMARK(BM_Diagram)->Arg(4)->Arg(8)->Arg(16);

static void BM_InducedMatching(benchmark::State& state) {
  Rng rng(2);
  const LadderMorphism alpha = random_morphism(rng, static_cast<Index>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(induced_matching(alpha));
}
BENCHMARK(BM_InducedMatching)->Arg(3)->Arg(5)->Arg(8);

static void BM_BLMatching(benchmark::State& state) {
  Rng rng(3);
  const LadderMorphism alpha = random_morphism(rng, static_cast<Index>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(bl_matching(alpha));
}
BENCHMARK(BM_BLMatching)->Arg(3)->Arg(5)->Arg(8);

static void BM_EnrichedMatching(benchmark::State& state) {
  Rng rng(4);
  const Span s = random_span(rng, static_cast<Index>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(enriched_matching(s));
}
BENCHMARK(BM_EnrichedMatching)->Arg(3)->Arg(4)->Arg(6);

static void BM_Homology(benchmark::State& state) {
  Rng rng(5);
  const SimplicialFiltration f = random_filtration(rng, 6, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(homology_module(f, 1));
}
BENCHMARK(BM_Homology)->Arg(12)->Arg(40)->Arg(120);
BENCHMARK_MAIN();
