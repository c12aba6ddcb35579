#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "weakhash/approx.hpp"
#include "weakhash/prohorov.hpp"
#include "weakhash/weakhash.hpp"

namespace {

using namespace weakhash;

CountingMeasure random_measure(std::mt19937_64& rng, const MetricContext& ctx, int atoms) {
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  std::uniform_int_distribution<Mass> mult(1, 3);
  std::vector<Atom> out;
  for (int i = 0; i < atoms; ++i) {
    std::vector<double> x(ctx.dimension());
    for (double& c : x) c = coord(rng);
    out.push_back({Point(std::move(x)), mult(rng)});
  }
  return CountingMeasure(ctx, std::move(out));
}

std::pair<CountingMeasure, CountingMeasure> pair_of(int atoms) {
  std::mt19937_64 rng(static_cast<unsigned>(atoms));
  const MetricContext plane(2);
  return {random_measure(rng, plane, atoms), random_measure(rng, plane, atoms)};
}

void BM_ProhorovDistance(benchmark::State& state) {
  const auto [mu, nu] = pair_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prohorov_distance(mu, nu));
}
BENCHMARK(BM_ProhorovDistance)->RangeMultiplier(4)->Range(4, 256);

void BM_WeakHashDistance(benchmark::State& state) {
  const auto [mu, nu] = pair_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(weak_hash_distance(mu, nu));
}
BENCHMARK(BM_WeakHashDistance)->RangeMultiplier(4)->Range(4, 64);

void BM_Approximate(benchmark::State& state) {
  const auto [mu, nu] = pair_of(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(approximate(mu, 5.0, 0.01));
}
BENCHMARK(BM_Approximate)->RangeMultiplier(4)->Range(4, 64);

}  // namespace

BENCHMARK_MAIN();
