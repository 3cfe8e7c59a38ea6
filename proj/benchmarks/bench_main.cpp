#include <benchmark/benchmark.h>

#include "chartherm/asymmetry.hpp"
#include "chartherm/genus.hpp"
#include "chartherm/thermo.hpp"
#include "chartherm/trace_geom.hpp"

namespace {

using namespace chartherm;

void BM_GeneratingSeries(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(generating_series(GenusKind::kL, order));
}
BENCHMARK(BM_GeneratingSeries)->Arg(10)->Arg(30)->Arg(60);

void BM_LAHatIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_LA_identity(30));
}
BENCHMARK(BM_LAHatIdentity);

void BM_MultiplicativeSequence(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicative_sequence(GenusKind::kL, degree));
}
BENCHMARK(BM_MultiplicativeSequence)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_IntegrateDensity(benchmark::State& state) {
  const int levels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_density(1.0, levels));
}
BENCHMARK(BM_IntegrateDensity)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MatsubaraPartition(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(matsubara_partition(1.0, modes));
}
BENCHMARK(BM_MatsubaraPartition)->Arg(10000)->Arg(100000);

void BM_IndexIntegral(benchmark::State& state) {
  const IndexDensitySpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(index_integral(spec, 1e-10));
}
BENCHMARK(BM_IndexIntegral);

void BM_PartitionClosed(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_closed(x));
    x = x < 20.0 ? x + 0.001 : 0.5;
  }
}
BENCHMARK(BM_PartitionClosed);

}  // namespace

BENCHMARK_MAIN();
