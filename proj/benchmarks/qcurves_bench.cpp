#include <benchmark/benchmark.h>

#include "qcurves/cohring.hpp"
#include "qcurves/cubics.hpp"
#include "qcurves/fixedloci.hpp"
#include "qcurves/tangent.hpp"

namespace {

void BM_FixedLines(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::fixed_lines());
}
BENCHMARK(BM_FixedLines);

void BM_FixedConics(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::fixed_conics());
}
BENCHMARK(BM_FixedConics);

void BM_ConicTangentRows(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::conic_rows());
}
BENCHMARK(BM_ConicTangentRows);

void BM_CubicCensus(benchmark::State& state) {
  const auto graph = qcurves::incidence_graph();
  const auto conics = qcurves::fixed_conics();
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::count_invariant_cubics(graph, conics));
}
BENCHMARK(BM_CubicCensus);

void BM_TwistedCubicFamily(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::verify_twisted_cubic_family());
}
BENCHMARK(BM_TwistedCubicFamily);

void BM_GrothendieckRelation(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::grothendieck_relation());
}
BENCHMARK(BM_GrothendieckRelation);

// Hilbert series of the cubic-space ring up to the given Chow degree.
void BM_HilbertSeriesS3(benchmark::State& state) {
  const int max_degree = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcurves::hilbert_series_s3(max_degree));
}
BENCHMARK(BM_HilbertSeriesS3)->Arg(5)->Arg(9)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
