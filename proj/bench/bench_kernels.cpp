// Parallel kernels against their serial references on synthetic datasets.

#include <benchmark/benchmark.h>

#include <random>

#include "udea/dea.hpp"
#include "udea/facets.hpp"
#include "udea/udea.hpp"

namespace {

udea::Dataset synthetic(std::size_t dmus, std::size_t inputs, std::size_t outputs, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(1.0, 10.0);
  udea::Matrix x(inputs, dmus);
  udea::Matrix y(outputs, dmus);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dmus; ++i) {
    names.push_back("D" + std::to_string(i));
    for (std::size_t n = 0; n < inputs; ++n) x(n, i) = value(rng);
    for (std::size_t m = 0; m < outputs; ++m) y(m, i) = value(rng);
  }
  std::vector<std::string> in_names;
  std::vector<std::string> out_names;
  for (std::size_t n = 0; n < inputs; ++n) in_names.push_back("x" + std::to_string(n));
  for (std::size_t m = 0; m < outputs; ++m) out_names.push_back("y" + std::to_string(m));
  return {names, in_names, out_names, x, y};
}

void BM_SolveAllSerial(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 2, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(udea::solve_all_serial(ds));
}

void BM_SolveAllParallel(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 2, 2, 7);
  for (auto _ : state) benchmark::DoNotOptimize(udea::solve_all(ds));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 1, 1, 11);
  udea::UncertaintyConfig cfg;
  cfg.cap = 3.6;
  cfg.step = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(udea::udea_sweep_serial(ds, cfg));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 1, 1, 11);
  udea::UncertaintyConfig cfg;
  cfg.cap = 3.6;
  cfg.step = 0.05;
  for (auto _ : state) benchmark::DoNotOptimize(udea::udea_sweep(ds, cfg));
}

void BM_FacetsSerial(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(udea::enumerate_efficient_facets_serial(ds));
}

void BM_FacetsParallel(benchmark::State& state) {
  const auto ds = synthetic(static_cast<std::size_t>(state.range(0)), 2, 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(udea::enumerate_efficient_facets(ds));
}

}  // namespace

BENCHMARK(BM_SolveAllSerial)->Arg(50)->Arg(200);
BENCHMARK(BM_SolveAllParallel)->Arg(50)->Arg(200);
BENCHMARK(BM_SweepSerial)->Arg(20)->Arg(60);
BENCHMARK(BM_SweepParallel)->Arg(20)->Arg(60);
BENCHMARK(BM_FacetsSerial)->Arg(16)->Arg(40);
BENCHMARK(BM_FacetsParallel)->Arg(16)->Arg(40);

BENCHMARK_MAIN();
