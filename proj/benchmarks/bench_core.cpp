#include <benchmark/benchmark.h>

#include <random>

#include "carmichael/compat.hpp"
#include "carmichael/cyclotomic.hpp"
#include "carmichael/enumerate.hpp"
#include "carmichael/groups.hpp"
#include "carmichael/korselt.hpp"
#include "carmichael/phiratio.hpp"

using namespace carmichael;

static void BM_IsPrime64(benchmark::State& state) {
  std::mt19937_64 rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(rng() | 1));
}
BENCHMARK(BM_IsPrime64);

static void BM_FactorizeSemiprime(benchmark::State& state) {
  const u64 n = u64{4294967291} * 4294967279;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(n));
}
BENCHMARK(BM_FactorizeSemiprime);

static void BM_IsCarmichael(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(is_carmichael(u64{9'999'109'081}));
}
BENCHMARK(BM_IsCarmichael);

static void BM_EnumerateProducts(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_products(limit));
}
BENCHMARK(BM_EnumerateProducts)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

static void BM_EnumerateScan(benchmark::State& state) {
  const u64 limit = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_scan(limit));
}
BENCHMARK(BM_EnumerateScan)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

static void BM_ClassifyTable(benchmark::State& state) {
  for (auto _ : state) {
    for (u64 m = 1; m <= 200; ++m) {
      for (u64 r = 0; r < m; ++r) benchmark::DoNotOptimize(classify(static_cast<i64>(r), m));
    }
  }
}
BENCHMARK(BM_ClassifyTable)->Unit(benchmark::kMillisecond);

static void BM_Dlog(benchmark::State& state) {
  const u64 n = 9'699'690;
  const auto g = unit_group(factorize(n));
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    u64 x = rng() % n;
    while (std::gcd(x, n) != 1) x = rng() % n;
    benchmark::DoNotOptimize(g.dlog(x));
  }
}
BENCHMARK(BM_Dlog);

static void BM_SubsetSolve(benchmark::State& state) {
  const auto g = unit_group(factorize(u64{720720}));
  std::mt19937_64 rng(3);
  std::vector<GroupVector> el;
  for (int i = 0; i < state.range(0); ++i) el.push_back(g.decode(rng() % g.order()));
  SubsetSolveConfig c;
  c.exhaustive_below = 0;
  for (auto _ : state) benchmark::DoNotOptimize(subset_product_solve(g, el, g.identity(), {}, c));
}
BENCHMARK(BM_SubsetSolve)->Arg(20)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_ZetaPartial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta_nu_partial(7, 12, static_cast<u64>(state.range(0))));
}
BENCHMARK(BM_ZetaPartial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

static void BM_Mobius(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_mobius_identity(10'000));
}
BENCHMARK(BM_Mobius)->Unit(benchmark::kMillisecond);

static void BM_Erdos(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(erdos_sequence(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Erdos)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
