// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "rvar/grassmannian.hpp"
#include "rvar/variety.hpp"

namespace {

constexpr std::uint64_t kBudget = 3'000'000;

void BM_Enumerate(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rvar::enumerate_grassmannian(3, 6, q, kBudget).size());
  state.SetItemsProcessed(state.iterations() * rvar::gaussian_binomial(6, 3, q));
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rvar::enumerate_grassmannian_serial(3, 6, q, kBudget).size());
  state.SetItemsProcessed(state.iterations() * rvar::gaussian_binomial(6, 3, q));
}

const rvar::PointSet& points(std::uint32_t q) {
  static rvar::PointCache cache(kBudget);
  return *cache.get(3, 6, q);
}

rvar::VarietySpec sample_spec() {
  return rvar::w_spec(rvar::KSubset({1, 2, 3}, 6), rvar::KSubset({4, 5, 6}, 6));
}

void BM_Filter(benchmark::State& state) {
  const auto& p = points(static_cast<std::uint32_t>(state.range(0)));
  const auto spec = sample_spec();
  for (auto _ : state) benchmark::DoNotOptimize(rvar::filter_points(p, spec).size());
  state.SetItemsProcessed(state.iterations() * p.size());
}

void BM_FilterSerial(benchmark::State& state) {
  const auto& p = points(static_cast<std::uint32_t>(state.range(0)));
  const auto spec = sample_spec();
  for (auto _ : state) benchmark::DoNotOptimize(rvar::filter_points_serial(p, spec).size());
  state.SetItemsProcessed(state.iterations() * p.size());
}

void BM_Count(benchmark::State& state) {
  const auto& p = points(static_cast<std::uint32_t>(state.range(0)));
  const auto spec = sample_spec();
  for (auto _ : state) benchmark::DoNotOptimize(rvar::count_points(p, spec));
  state.SetItemsProcessed(state.iterations() * p.size());
}

void BM_CountSerial(benchmark::State& state) {
  const auto& p = points(static_cast<std::uint32_t>(state.range(0)));
  const auto spec = sample_spec();
  for (auto _ : state) benchmark::DoNotOptimize(rvar::count_points_serial(p, spec));
  state.SetItemsProcessed(state.iterations() * p.size());
}

}  // namespace

BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Filter)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FilterSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Count)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountSerial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
