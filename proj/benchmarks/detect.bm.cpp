#include <benchmark/benchmark.h>

#include <vector>

#include "tuhyper/detect.hpp"
#include "tuhyper/gen.hpp"

using namespace tuhyper;

namespace {

std::vector<Hypergraph> corpus(std::size_t n, std::size_t count) {
  Rng rng(n);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_disjoint(rng, n, n));
  return out;
}

void BM_DecideDisjoint(benchmark::State& state) {
  const auto gs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(decide_unimodular_disjoint(gs[i++ % gs.size()]));
}
BENCHMARK(BM_DecideDisjoint)->DenseRange(6, 14, 4);

void BM_Camion(benchmark::State& state) {
  const auto gs = corpus(static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(camion_unimodular(gs[i++ % gs.size()]));
}
BENCHMARK(BM_Camion)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
