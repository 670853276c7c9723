#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "mrep/appendix.hpp"
#include "mrep/implicitize.hpp"

namespace {

using namespace mrep;

void BM_ThresholdReport(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  auto sys = fixtures::random_forms(n, d, 7);
  for (auto _ : state) {
    KoszulLab lab(sys);
    benchmark::DoNotOptimize(lab.report().mu0);
  }
}
BENCHMARK(BM_ThresholdReport)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_BuildMatrix(benchmark::State& state) {
  auto sys = fixtures::random_forms(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 7);
  KoszulLab lab(sys);
  const int mu = lab.mu0();
  for (auto _ : state) benchmark::DoNotOptimize(build_matrix(lab, mu).ncols());
}
BENCHMARK(BM_BuildMatrix)->Args({2, 3})->Args({3, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_GcdMinors(benchmark::State& state) {
  auto sys = fixtures::random_forms(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 7);
  KoszulLab lab(sys);
  auto m = build_matrix(lab, lab.mu0() + 1);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_minors(m).degree());
}
BENCHMARK(BM_GcdMinors)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_SixBasePointsImplicitize(benchmark::State& state) {
  auto sys = fixtures::six_base_points();
  KoszulLab lab(sys);
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(lab, static_cast<int>(state.range(0))).degree);
}
BENCHMARK(BM_SixBasePointsImplicitize)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_LefschetzGrid(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lefschetz_grid(static_cast<std::size_t>(state.range(0)), static_cast<unsigned>(state.range(1))).size());
}
BENCHMARK(BM_LefschetzGrid)->Args({3, 3})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_LemmeGrid(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lemme_grid(m, m, 4).size());
}
BENCHMARK(BM_LemmeGrid)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
