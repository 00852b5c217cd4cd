// Serial reference vs OpenMP kernels. The thread count is the benchmark argument.

#include <benchmark/benchmark.h>

#include <random>

#include "modhyp/kernels.hpp"

using namespace modhyp;

namespace {

const PrimeModulus kP(1000003);

PolyModP quartic() { return PolyModP(kP, {7, 0, 3, 11, 1}); }

std::vector<std::uint64_t> random_set(std::size_t n) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> s(n);
  for (auto& v : s) v = 1 + rng() % kP.value();
  return s;
}

void BM_poly_sum_reference(benchmark::State& state) {
  const auto f = quartic();
  for (auto _ : state) benchmark::DoNotOptimize(reference::poly_symbol_sum(f));
}

void BM_poly_sum_kernel(benchmark::State& state) {
  const auto f = quartic();
  for (auto _ : state) benchmark::DoNotOptimize(kernels::poly_symbol_sum(f, static_cast<int>(state.range(0))));
}

void BM_run_count_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::run_count(kP, 4));
}

void BM_run_count_kernel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::run_count(kP, 4, static_cast<int>(state.range(0))));
}

void BM_double_sum_reference(benchmark::State& state) {
  const auto s = random_set(64);
  for (auto _ : state) benchmark::DoNotOptimize(reference::double_sum(kP, 1, 20000, s));
}

void BM_double_sum_kernel(benchmark::State& state) {
  const auto s = random_set(64);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::double_sum(kP, 1, 20000, s, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_poly_sum_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_poly_sum_kernel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_run_count_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_run_count_kernel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_double_sum_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_double_sum_kernel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
