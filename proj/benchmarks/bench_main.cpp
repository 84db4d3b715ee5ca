#include <benchmark/benchmark.h>

#include <random>

#include "freelip/freelip.hpp"

using namespace freelip;

namespace {

FreeElement dense_element(const SpacePtr& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<int, Rational> weights;
  for (int x = 0; x < space->size(); ++x) {
    weights[x] = Rational(static_cast<int>(rng() % 19) - 9,
                          1 + static_cast<int>(rng() % 4));
  }
  return FreeElement::from_weights(space, weights);
}

void BM_FreeNorm(benchmark::State& state) {
  SpacePtr space = random_space(static_cast<int>(state.range(0)), 17);
  FreeElement m = dense_element(space, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_norm(m).value);
  }
}
BENCHMARK(BM_FreeNorm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_MinimalRepresentation(benchmark::State& state) {
  SpacePtr space = random_space(static_cast<int>(state.range(0)), 23);
  FreeElement m = dense_element(space, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_representation(m).total_variation());
  }
}
BENCHMARK(BM_MinimalRepresentation)->Arg(4)->Arg(8)->Arg(16);

void BM_EnumerateExtreme(benchmark::State& state) {
  SpacePtr space = random_space(static_cast<int>(state.range(0)), 31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_extreme(space).size());
  }
}
BENCHMARK(BM_EnumerateExtreme)->Arg(8)->Arg(16)->Arg(32);

void BM_ExtremeOracle(benchmark::State& state) {
  SpacePtr space = random_space(static_cast<int>(state.range(0)), 41);
  FreeElement m = molecule(space, 0, space->size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_extreme_oracle(m));
  }
}
BENCHMARK(BM_ExtremeOracle)->Arg(4)->Arg(8)->Arg(16);

void BM_Localize(benchmark::State& state) {
  SpacePtr space = random_space(static_cast<int>(state.range(0)), 47);
  FreeElement m = molecule(space, 0, space->size() - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(localize(m).verdict);
  }
}
BENCHMARK(BM_Localize)->Arg(4)->Arg(8)->Arg(16);

void BM_ChainAdjoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SpacePtr chain = chain_space(n);
  std::map<std::pair<int, int>, Rational> mass;
  for (int k = 1; k <= n; ++k) mass[{k, k - 1}] = Rational(1, n);
  DeLeeuwMeasure mu_n = DeLeeuwMeasure::from_masses(chain, mass);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adjoint(mu_n).is_zero());
  }
}
BENCHMARK(BM_ChainAdjoint)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
