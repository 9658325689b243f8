#include <random>

#include <benchmark/benchmark.h>

#include "toricsr/gale.hpp"
#include "toricsr/hilbert2d.hpp"
#include "toricsr/oracle.hpp"
#include "toricsr/toric.hpp"

namespace {

using namespace toricsr;

const IntegerMatrix kExample{{1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 1, 0}, {0, 1, 0, 1, 0, 1}, {-2, 0, 0, 0, -4, 5}};

// cone((1, 0), (1, k)) has k + 1 Hilbert basis elements
void BM_HilbertBasisWide(benchmark::State& state) {
  const Cone2D cone({1, 0}, {1, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(cone));
}
BENCHMARK(BM_HilbertBasisWide)->RangeMultiplier(4)->Range(4, 1024);

// cone((1, 0), (k - 1, k)): determinant k but only three elements
void BM_HilbertBasisThin(benchmark::State& state) {
  const std::int64_t k = state.range(0);
  const Cone2D cone({1, 0}, {k - 1, k});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(cone));
}
BENCHMARK(BM_HilbertBasisThin)->RangeMultiplier(4)->Range(4, 1024);

void BM_HilbertBasisVisibility(benchmark::State& state) {
  const Cone2D cone({1, 0}, {1, state.range(0)});
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis_by_visibility(cone));
}
BENCHMARK(BM_HilbertBasisVisibility)->RangeMultiplier(4)->Range(4, 1024);

void BM_GaleTransform(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gale_transform(kExample));
}
BENCHMARK(BM_GaleTransform);

void BM_CheckExample(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_strongly_robust(kExample));
}
BENCHMARK(BM_CheckExample);

void BM_GraverOracleExample(benchmark::State& state) {
  const GaleConfiguration g = gale_transform(kExample);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::graver_bruteforce(g, state.range(0)));
}
BENCHMARK(BM_GraverOracleExample)->Arg(6)->Arg(12)->Arg(24);

void BM_FiberExample(benchmark::State& state) {
  const GaleConfiguration g = gale_transform(kExample);
  const std::int64_t k = state.range(0);
  const ExponentVector v{k, k, k, k, k, k};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate_fiber(g, v));
}
BENCHMARK(BM_FiberExample)->Arg(2)->Arg(8)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
