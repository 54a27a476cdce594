#include <benchmark/benchmark.h>

#include "starks/bell.hpp"
#include "starks/cyclotomic_field.hpp"
#include "starks/games.hpp"
#include "starks/golden.hpp"
#include "starks/ksets.hpp"

using namespace starks;

static void BM_InnerProduct(benchmark::State& state) {
  const KSSet k = golden::j11_set();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(inner_product(k.vectors[i % k.vectors.size()], k.vectors[(i * 7 + 3) % k.vectors.size()]));
    ++i;
  }
}
BENCHMARK(BM_InnerProduct);

static void BM_ZeroTest(benchmark::State& state) {
  const KSSet k = golden::j11_set();
  const CycInt x = inner_product(k.at(Pair::of(1, 2)), k.at(Pair::of(1, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(x.is_zero());
}
BENCHMARK(BM_ZeroTest);

static void BM_VerifyBases(benchmark::State& state) {
  const KSSet k = golden::j11_set();
  for (auto _ : state) benchmark::DoNotOptimize(verify_bases(k).passed());
}
BENCHMARK(BM_VerifyBases)->Unit(benchmark::kMillisecond);

static void BM_Rank(benchmark::State& state) {
  const KSSet k = golden::j11_set();
  for (auto _ : state) benchmark::DoNotOptimize(rank(k.vectors));
}
BENCHMARK(BM_Rank)->Unit(benchmark::kMillisecond);

static void BM_ClassicalN7(benchmark::State& state) {
  const StarGame g = make_game(7, static_cast<Variant>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classical_optimum(g).max_wins);
}
BENCHMARK(BM_ClassicalN7)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

static void BM_BellBoundN7(benchmark::State& state) {
  const BellFunctional f = build_functional(7);
  for (auto _ : state) benchmark::DoNotOptimize(local_bound(f).bound);
}
BENCHMARK(BM_BellBoundN7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
