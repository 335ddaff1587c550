#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "susy/enumerate.hpp"
#include "susy/operad.hpp"

namespace {

using namespace susy;

void BM_CanonicalForm(benchmark::State& state) {
  testing::Rng rng(7);
  std::vector<SusyGraph> graphs;
  for (int i = 0; i < 64; ++i) graphs.push_back(testing::random_susy_graph(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]).certificate);
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(2)->Arg(4)->Arg(6);

void BM_EnumerateGenus0(benchmark::State& state) {
  std::set<Label> ns;
  for (int i = 1; i <= state.range(0); ++i) ns.insert(std::to_string(i));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_strata(0, ns, {}).strata.size());
  }
}
BENCHMARK(BM_EnumerateGenus0)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_EnumerateMixed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_strata(1, {"1"}, {"2", "3"}).strata.size());
  }
}
BENCHMARK(BM_EnumerateMixed)->Unit(benchmark::kMillisecond);

void BM_EvaluateOperad(benchmark::State& state) {
  testing::Rng rng(11);
  std::vector<SusyMorphism> morphisms;
  for (int i = 0; i < 64; ++i) {
    morphisms.push_back(testing::random_morphism(rng, testing::random_susy_graph(rng, 6), "b"));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate_operad(morphisms[i++ % morphisms.size()]).ramond_fiber_rank);
  }
}
BENCHMARK(BM_EvaluateOperad);

}  // namespace

BENCHMARK_MAIN();
