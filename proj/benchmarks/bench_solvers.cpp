#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ordstop/fptas.hpp"
#include "ordstop/oracle.hpp"
#include "ordstop/stopping.hpp"
#include "ordstop/two_point.hpp"

using namespace ordstop;

namespace {

std::vector<Dist> random_finite_sequence(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Dist> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = 0.05 + 0.9 * unit(rng);
    const double p = 0.05 + 0.8 * unit(rng);
    const double q = 0.05 + (0.95 - p - 0.05) * unit(rng);
    out.emplace_back(three_point(0.0, m, 1.0, p, q));
  }
  return out;
}

TwoPointInstance random_two_point(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TwoPointVar> vars;
  vars.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = unit(rng);
    double y = unit(rng);
    if (x > y) std::swap(x, y);
    vars.push_back({x, y, unit(rng)});
  }
  return TwoPointInstance(std::move(vars));
}

std::vector<FiniteDist> random_zero_mid_one(std::size_t n,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<FiniteDist> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = 0.05 + 0.9 * unit(rng);
    const double p = 0.05 + 0.8 * unit(rng);
    const double q = 0.05 + (0.9 - p) * unit(rng);
    out.push_back(three_point(0.0, m, 1.0, p, q));
  }
  return out;
}

void BM_SequenceValue(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Dist> seq = random_finite_sequence(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sequence_value(std::span<const Dist>(seq)).value);
  }
}
BENCHMARK(BM_SequenceValue)->Arg(16)->Arg(256)->Arg(4096);

void BM_TwoPointSolve(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  TwoPointInstance inst = random_two_point(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(inst).value);
  }
}
BENCHMARK(BM_TwoPointSolve)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteForceOrder(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Dist> seq = random_finite_sequence(n, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_order(std::span<const Dist>(seq)).best_value);
  }
}
BENCHMARK(BM_BruteForceOrder)->Arg(6)->Arg(8);

void BM_FptasCommonEndpoints(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<FiniteDist> dists = random_zero_mid_one(n, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_common_endpoints(dists, 0.1).value);
  }
}
BENCHMARK(BM_FptasCommonEndpoints)->Arg(8)->Arg(12)->Arg(16);

void BM_HindsightMax(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<FiniteDist> dists = random_zero_mid_one(n, 19);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hindsight_max(std::span<const FiniteDist>(dists)));
  }
}
BENCHMARK(BM_HindsightMax)->Arg(16)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
