#include <benchmark/benchmark.h>

#include "derinv/invariants.hpp"
#include "derinv/shalev.hpp"

using namespace derinv;

static void BM_WendtSerial(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wendt(n));
}
BENCHMARK(BM_WendtSerial)->Arg(24)->Arg(48)->Arg(72);

static void BM_WendtParallel(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wendt_parallel(n));
}
BENCHMARK(BM_WendtParallel)->Arg(24)->Arg(48)->Arg(72);

static void arith_free(benchmark::State& state, Exec exec) {
  const RootSet X = roots_of_unity(static_cast<unsigned>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_arith_free(X.elems, X.field, exec).free);
}
static void BM_ArithFreeSerial(benchmark::State& state) { arith_free(state, Exec::Serial); }
static void BM_ArithFreeParallel(benchmark::State& state) { arith_free(state, Exec::Parallel); }
BENCHMARK(BM_ArithFreeSerial)->Arg(31)->Arg(63)->Arg(127);
BENCHMARK(BM_ArithFreeParallel)->Arg(31)->Arg(63)->Arg(127);

static void BM_NpScanSerial(benchmark::State& state) {
  const auto pairs = scan_pairs(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(np_scan(pairs, Exec::Serial).size());
}
static void BM_NpScanParallel(benchmark::State& state) {
  const auto pairs = scan_pairs(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(np_scan(pairs, Exec::Parallel).size());
}
BENCHMARK(BM_NpScanSerial)->Arg(12)->Arg(18);
BENCHMARK(BM_NpScanParallel)->Arg(12)->Arg(18);

BENCHMARK_MAIN();
