#include <benchmark/benchmark.h>

#include <vector>

#include "tuhyper/detect.hpp"
#include "tuhyper/extract.hpp"
#include "tuhyper/gen.hpp"

using namespace tuhyper;

namespace {

std::vector<Hypergraph> non_tu_corpus(std::size_t n) {
  Rng rng(n * 31);
  std::vector<Hypergraph> out;
  while (out.size() < 32) {
    auto g = sample_disjoint(rng, n, n);
    if (!decide_unimodular_disjoint(g).unimodular) out.push_back(std::move(g));
  }
  return out;
}

void run(benchmark::State& state, CoreOrder order) {
  const auto gs = non_tu_corpus(static_cast<std::size_t>(state.range(0)));
  ExtractLimits limits;
  limits.linalg.max_dimension_sum = 40;
  limits.core_order = order;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(extract_witness(gs[i++ % gs.size()], limits));
}

void BM_ExtractSmallest(benchmark::State& state) { run(state, CoreOrder::Smallest); }
void BM_ExtractLargest(benchmark::State& state) { run(state, CoreOrder::Largest); }
BENCHMARK(BM_ExtractSmallest)->DenseRange(6, 10, 2);
BENCHMARK(BM_ExtractLargest)->DenseRange(6, 10, 2);

}  // namespace

BENCHMARK_MAIN();
