#include <benchmark/benchmark.h>

#include "covgroup/classification.hpp"
#include "covgroup/covers.hpp"
#include "covgroup/lattice.hpp"

using namespace covgroup;

namespace {

Group elementary(int rank) {
  Group g = presets::cyclic(2);
  for (int i = 1; i < rank; ++i) g = presets::direct_product(g, presets::cyclic(2));
  return g;
}

void BM_Lattice(benchmark::State& state, Group g) {
  for (auto _ : state) benchmark::DoNotOptimize(Lattice(g).subgroups().size());
}

void BM_SigmaExact(benchmark::State& state, Group g) {
  const Lattice l(g);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_exact(l));
}

void BM_SigmaTomkinson(benchmark::State& state, Group g) {
  const Lattice l(g);
  for (auto _ : state) benchmark::DoNotOptimize(sigma_tomkinson(l));
}

void BM_EnumerateCovers(benchmark::State& state, Group g) {
  const Lattice l(g);
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_irredundant_cover(l, {}, [&](std::span<const std::size_t>) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}

void BM_Classify(benchmark::State& state, Group g) {
  const Lattice l(g);
  for (auto _ : state) benchmark::DoNotOptimize(classify(l).one_sized);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Lattice, S4, presets::symmetric(4));
BENCHMARK_CAPTURE(BM_Lattice, A5, presets::alternating(5));
BENCHMARK_CAPTURE(BM_Lattice, C2x4, elementary(4));
BENCHMARK_CAPTURE(BM_Lattice, C2x6, elementary(6));
BENCHMARK_CAPTURE(BM_SigmaExact, A5, presets::alternating(5));
BENCHMARK_CAPTURE(BM_SigmaExact, C7xC7, presets::direct_product(presets::cyclic(7), presets::cyclic(7)));
BENCHMARK_CAPTURE(BM_SigmaTomkinson, S4, presets::symmetric(4));
BENCHMARK_CAPTURE(BM_EnumerateCovers, C2x3, elementary(3));
BENCHMARK_CAPTURE(BM_EnumerateCovers, C2x4, elementary(4))->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_EnumerateCovers, Q32, presets::generalized_quaternion(5));
BENCHMARK_CAPTURE(BM_Classify, C13xC4, presets::semidirect_cp_cn(13, 4, 5));

BENCHMARK_MAIN();
