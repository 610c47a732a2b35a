#include <benchmark/benchmark.h>

#include <random>

#include "gfm/arrangement.hpp"
#include "gfm/fermat_group.hpp"
#include "gfm/invariants.hpp"
#include "gfm/modaction.hpp"

namespace {

void BM_OrbitEnumeration(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  const auto lambda = gfm::random_standard_parameter(n, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(gfm::orbit_and_stabilizer(lambda));
}
BENCHMARK(BM_OrbitEnumeration)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_H0Twist(benchmark::State& state) {
  const gfm::GfmType type{3, 5, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(gfm::h0_twist(type, 40));
}
BENCHMARK(BM_H0Twist)->Arg(5)->Arg(7)->Arg(9);

void BM_Normalize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int d = static_cast<int>(state.range(0));
  const auto lambda = gfm::random_standard_parameter(d + 4, d, rng);
  const auto arrangement = gfm::arrangement_of(lambda);
  for (auto _ : state) benchmark::DoNotOptimize(gfm::normalize(arrangement));
}
BENCHMARK(BM_Normalize)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_FixedLocus(benchmark::State& state) {
  const gfm::GfmType type{2, 5, static_cast<int>(state.range(0))};
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(0, 4);
  std::vector<long> exps(static_cast<std::size_t>(type.n) + 1);
  for (auto& x : exps) x = e(rng);
  const auto g = gfm::GroupElement::from_exponents(type.k, exps);
  for (auto _ : state) benchmark::DoNotOptimize(gfm::fixed_locus(g, type));
}
BENCHMARK(BM_FixedLocus)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
