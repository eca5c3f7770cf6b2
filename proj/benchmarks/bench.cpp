#include <benchmark/benchmark.h>

#include "sitepc/enumeration.hpp"
#include "sitepc/lace.hpp"
#include "sitepc/percolation.hpp"
#include "sitepc/series.hpp"
#include "sitepc/triangle.hpp"

using namespace sitepc;

static void BM_WrapSweep(benchmark::State& state) {
  const TorusGeometry g(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::uint64_t stream = 0;
  for (auto _ : state) benchmark::DoNotOptimize(first_wrap_count(g, 1, stream++));
  state.counters["sites"] = static_cast<double>(g.size());
}
BENCHMARK(BM_WrapSweep)->Args({2, 64})->Args({3, 32})->Args({4, 16})->Unit(benchmark::kMillisecond);

static void BM_SeriesInverse(benchmark::State& state) {
  std::vector<Rational> c;
  for (int i = 0; i <= state.range(0); ++i) c.emplace_back(i + 1, 2 * i + 3);
  const TruncatedSeries a(Variable::t, c);
  for (auto _ : state) benchmark::DoNotOptimize(series_inverse(a));
}
BENCHMARK(BM_SeriesInverse)->Arg(6)->Arg(16)->Arg(32);

static void BM_FixedPoint(benchmark::State& state) {
  const auto terms = lace_coefficient_expansions();
  for (auto _ : state) benchmark::DoNotOptimize(solve_pc_fixed_point(terms, 2));
}
BENCHMARK(BM_FixedPoint);

static void BM_CycleEnumeration(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycles(3, Point{1, 1, 0}, len));
}
BENCHMARK(BM_CycleEnumeration)->Arg(4)->Arg(6)->Arg(8);

static void BM_UnionPolynomial(benchmark::State& state) {
  const auto f = enumerate_cycles_up_to(3, Point{1, 1, 0}, 6);
  for (auto _ : state) benchmark::DoNotOptimize(union_occupation_probability(f));
}
BENCHMARK(BM_UnionPolynomial);

static void BM_PiSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TorusGeometry g(9, 10);
  std::uint64_t sample = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pi_hat_sample(g, n, 1.0 / 18.0, 4, 1, sample++));
}
BENCHMARK(BM_PiSample)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

static void BM_PairCounts(benchmark::State& state) {
  const TorusGeometry g(5, 8);
  std::uint64_t stream = 0;
  for (auto _ : state) {
    const auto c = Configuration::sample(g, 0.08, 1, stream++, Storage::dense);
    benchmark::DoNotOptimize(connected_pair_counts(c));
  }
}
BENCHMARK(BM_PairCounts)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
