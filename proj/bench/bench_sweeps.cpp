// Serial reference vs OpenMP-parallel oracle sweeps.

#include <benchmark/benchmark.h>

#include "halfpoint/oracle.hpp"

namespace {

using halfpoint::Execution;

void run(benchmark::State& state, const char* sweep, Execution exec) {
  const auto p = state.range(0);
  for (auto _ : state) {
    auto report = halfpoint::run_sweep(sweep, p, halfpoint::SignConvention::MinusE, exec);
    benchmark::DoNotOptimize(report);
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}

#define HALFPOINT_BENCH(name, sweep)                                                            \
  void name##_serial(benchmark::State& s) { run(s, sweep, Execution::Serial); }                 \
  void name##_parallel(benchmark::State& s) { run(s, sweep, Execution::Parallel); }              \
  BENCHMARK(name##_serial)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond)->UseRealTime();     \
  BENCHMARK(name##_parallel)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond)->UseRealTime();

HALFPOINT_BENCH(gate, "gate")
HALFPOINT_BENCH(classify, "classify")
HALFPOINT_BENCH(torsion, "torsion")
HALFPOINT_BENCH(halves, "halves")

}  // namespace

BENCHMARK_MAIN();
