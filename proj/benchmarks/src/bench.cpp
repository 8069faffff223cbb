#include <benchmark/benchmark.h>

#include <random>

#include "liemc/presets.hpp"

using namespace liemc;

namespace {

FieldTower gf(int d) {
  switch (d) {
    case 2: return FieldTower::finite(2, {1, 1, 1});
    case 3: return FieldTower::finite(2, {1, 1, 0, 1});
    default: return FieldTower::finite(2, {1, 1, 0, 0, 1});
  }
}

void BM_Rref(benchmark::State& state) {
  const int cols = static_cast<int>(state.range(0));
  const PrimeField gf2(2);
  std::mt19937_64 rng(1);
  std::vector<FVec> rows(cols, FVec(cols));
  for (auto& r : rows)
    for (auto& v : r) v = static_cast<Scalar>(rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(rows, gf2));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(32)->Arg(96);

void BM_Validate(benchmark::State& state) {
  const auto t = gf(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto m = build_metabelian(t, n);
    benchmark::DoNotOptimize(validate(m));
  }
}
BENCHMARK(BM_Validate)->Arg(12)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Chain(benchmark::State& state) {
  const auto p = preset("ex4.2-d4");
  const auto m = p.job.build();
  const auto l1 = p.job.l1();
  for (auto _ : state) benchmark::DoNotOptimize(chain(m, l1));
}
BENCHMARK(BM_Chain)->Unit(benchmark::kMillisecond);

void BM_ClassifyD4(benchmark::State& state) {
  const auto p = preset("ex4.2-d4");
  const auto m = p.job.build();
  const auto l1 = p.job.l1();
  for (auto _ : state) benchmark::DoNotOptimize(classify(m, l1));
}
BENCHMARK(BM_ClassifyD4)->Unit(benchmark::kMillisecond);

void BM_Search(benchmark::State& state) {
  const auto t = gf(static_cast<int>(state.range(0)));
  const int depth = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_sequences(t, depth, 2, 10'000'000));
}
BENCHMARK(BM_Search)->Args({2, 12})->Args({3, 12})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
