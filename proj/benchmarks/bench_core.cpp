#include <benchmark/benchmark.h>

#include "detthick/ext.hpp"
#include "detthick/regularity.hpp"
#include "detthick/zset.hpp"

namespace {

using namespace detthick;

void BM_ZSetGeneralPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IdealSpec x = power_gens(2, n + 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(zset_general(x));
}
BENCHMARK(BM_ZSetGeneralPower)->DenseRange(3, 6);

void BM_RBruteforce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r_bruteforce(1, 3, n, n + 2));
}
BENCHMARK(BM_RBruteforce)->DenseRange(4, 7);

void BM_ExtGradedTopDegree(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const IdealSpec x = power_gens(2, d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ext_graded(x, 9, 3, {-3 * d - 12, -3 * d}));
}
BENCHMARK(BM_ExtGradedTopDegree)->DenseRange(4, 12, 4);

void BM_RegPowerFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(reg_power_family(3, n - 2, n, n, PowerKind::symbolic));
}
BENCHMARK(BM_RegPowerFamily)->DenseRange(5, 7);

}  // namespace

BENCHMARK_MAIN();
