#include "catpascal/graphs.hpp"
#include "catpascal/partitions.hpp"
#include "catpascal/pascal.hpp"
#include "catpascal/typea.hpp"

#include <benchmark/benchmark.h>

using namespace catpascal;

namespace {

void BM_LayerCountsSerial(benchmark::State& state) {
  auto g = double_young();
  for (auto _ : state) benchmark::DoNotOptimize(layer_counts_serial(g, static_cast<int>(state.range(0))));
}

void BM_LayerCountsParallel(benchmark::State& state) {
  auto g = double_young();
  for (auto _ : state) benchmark::DoNotOptimize(layer_counts(g, static_cast<int>(state.range(0))));
}

void verify(benchmark::State& state, const PascalFamily& f, Exec exec) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_family(f, static_cast<int>(state.range(0)), exec));
}

void BM_VerifyTLSerial(benchmark::State& state) { verify(state, *tl_family(), Exec::serial); }
void BM_VerifyTLParallel(benchmark::State& state) { verify(state, *tl_family(), Exec::parallel); }
void BM_VerifyBellSerial(benchmark::State& state) { verify(state, *bell_family(), Exec::serial); }
void BM_VerifyBellParallel(benchmark::State& state) { verify(state, *bell_family(), Exec::parallel); }

}  // namespace

BENCHMARK(BM_LayerCountsSerial)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LayerCountsParallel)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTLSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyTLParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBellSerial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyBellParallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
