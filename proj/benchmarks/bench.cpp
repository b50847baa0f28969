#include <benchmark/benchmark.h>

#include <random>

#include "ppn/coloring.hpp"
#include "ppn/constructions.hpp"
#include "ppn/criticality.hpp"
#include "ppn/degeneracy.hpp"
#include "ppn/enumeration.hpp"

namespace {

ppn::Multigraph random_graph(int n, unsigned t, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<unsigned> mult(1, t);
  ppn::Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.set_mult(u, v, mult(rng));
  return g;
}

void BM_Peel(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 2, 0.3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ppn::strictly_t_degenerate(g, 2));
}
BENCHMARK(BM_Peel)->Arg(16)->Arg(32)->Arg(64);

void BM_ChiRandom(benchmark::State& state) {
  const auto t = static_cast<unsigned>(state.range(1));
  const auto g = random_graph(static_cast<int>(state.range(0)), t, 0.5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ppn::chi_t(g, t).k);
}
BENCHMARK(BM_ChiRandom)->Args({10, 1})->Args({14, 1})->Args({12, 2})->Args({16, 2})->Args({12, 3});

void BM_ChiClique(benchmark::State& state) {
  const auto g = ppn::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ppn::chi_t(g, 2).k);
}
BENCHMARK(BM_ChiClique)->Arg(9)->Arg(13);

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 2, 0.5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ppn::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(7)->Arg(9);

void BM_IsCritical(benchmark::State& state) {
  const auto g = ppn::gallai_dirac(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ppn::is_critical(g, 1).is_critical);
}
BENCHMARK(BM_IsCritical)->Arg(4)->Arg(5);

void BM_Enumerate(benchmark::State& state) {
  const auto t = static_cast<unsigned>(state.range(0));
  const auto k = static_cast<int>(state.range(1));
  const auto n = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ppn::enumerate_critical(t, k, n).graphs.size());
}
BENCHMARK(BM_Enumerate)->Args({2, 3, 5})->Args({1, 4, 6})->Args({3, 3, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
