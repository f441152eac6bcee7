// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sigconv/kernels.hpp"
#include "sigconv/qseries.hpp"

using namespace sigconv;

namespace {

std::vector<Rational> random_coeffs(std::size_t order, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  std::vector<Rational> out(order + 1);
  for (auto& c : out) c = Rational(dist(rng), 1 + (dist(rng) & 15));
  return out;
}

void BM_SeriesProductSerial(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(order, 1);
  const auto b = random_coeffs(order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::series_product_serial(a, b, order));
}

void BM_SeriesProductParallel(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(order, 1);
  const auto b = random_coeffs(order, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::series_product_parallel(a, b, order));
}

void BM_SigmaSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sigma_values_serial(3, state.range(0)));
}

void BM_SigmaParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::sigma_values_parallel(3, state.range(0)));
}

void BM_ConvolutionSerial(benchmark::State& state) {
  const SigmaTable table(1, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::convolution_sums_serial(1, 14, state.range(0), table));
}

void BM_ConvolutionParallel(benchmark::State& state) {
  const SigmaTable table(1, state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::convolution_sums_parallel(1, 14, state.range(0), table));
}

void BM_FourSquaresSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::four_square_counts_serial(state.range(0)));
}

void BM_FourSquaresParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kernels::four_square_counts_parallel(state.range(0)));
}

}  // namespace

BENCHMARK(BM_SeriesProductSerial)->Arg(100)->Arg(400);
BENCHMARK(BM_SeriesProductParallel)->Arg(100)->Arg(400);
BENCHMARK(BM_SigmaSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_SigmaParallel)->Arg(10000)->Arg(100000);
BENCHMARK(BM_ConvolutionSerial)->Arg(2000)->Arg(10000);
BENCHMARK(BM_ConvolutionParallel)->Arg(2000)->Arg(10000);
BENCHMARK(BM_FourSquaresSerial)->Arg(200)->Arg(500);
BENCHMARK(BM_FourSquaresParallel)->Arg(200)->Arg(500);

BENCHMARK_MAIN();
