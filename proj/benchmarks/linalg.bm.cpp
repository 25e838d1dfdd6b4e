#include <benchmark/benchmark.h>

#include "tuhyper/gen.hpp"
#include "tuhyper/linalg.hpp"
#include "tuhyper/matrix.hpp"

using namespace tuhyper;

namespace {

IntMatrix random_unit_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = static_cast<std::int64_t>(rng.bounded(3)) - 1;
  return m;
}

void BM_DetExact(benchmark::State& state) {
  const auto m = random_unit_matrix(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(m));
}
BENCHMARK(BM_DetExact)->RangeMultiplier(2)->Range(4, 64);

void BM_DeltaExhaustive(benchmark::State& state) {
  Rng rng(2);
  const auto g = sample_graph(rng, static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  const auto a = incidence_matrix(g);
  for (auto _ : state) benchmark::DoNotOptimize(max_abs_subdet(a));
}
BENCHMARK(BM_DeltaExhaustive)->DenseRange(4, 10, 2);

}  // namespace

BENCHMARK_MAIN();
