#include <benchmark/benchmark.h>

#include "dialg/genlab.hpp"
#include "dialg/nilpotency.hpp"
#include "dialg/random.hpp"

using namespace dialg;

namespace {

void BM_RrefRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(7);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.vector(FieldSpec::rationals(), n, 9));
  const Matrix m = Matrix::from_rows(FieldSpec::rationals(), rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_RrefRational)->Arg(4)->Arg(8)->Arg(16);

void BM_SeriesTower(benchmark::State& state) {
  const auto d = generate({FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)),
                           GeneratorMode::SplitExtensionTower, 3});
  for (auto _ : state) benchmark::DoNotOptimize(dias_series(d));
}
BENCHMARK(BM_SeriesTower)->Arg(3)->Arg(5)->Arg(8);

void BM_EngelTower(benchmark::State& state) {
  const auto d = generate({FieldSpec::rationals(), static_cast<std::size_t>(state.range(0)),
                           GeneratorMode::SplitExtensionTower, 3});
  for (auto _ : state) benchmark::DoNotOptimize(engel_criterion(d));
}
BENCHMARK(BM_EngelTower)->Arg(3)->Arg(5)->Arg(8);

void BM_EnumerateF3(benchmark::State& state) {
  const auto workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_all(FieldSpec::prime(3), 2, workers));
}
BENCHMARK(BM_EnumerateF3)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
