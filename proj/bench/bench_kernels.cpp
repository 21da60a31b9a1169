#include <benchmark/benchmark.h>

#include "commlab/kernels.hpp"
#include "commlab/permutation.hpp"
#include "commlab/trials.hpp"

namespace {

using namespace commlab;

// S_7 acting on 7 points: large enough that the kernels do measurable work.
GroupPtr symmetric_group() {
  static const GroupPtr g = PermGroup::closure(
      {Permutation::from_cycles("(1 2)", 7), Permutation::from_cycles("(1 2 3 4 5 6 7)", 7)}, 7);
  return g;
}

ClassSet all_classes(const PermGroup& g) {
  ClassSet c = g.empty_classes();
  c.set();
  return c;
}

void BM_ReferenceKernel(benchmark::State& state) {
  const auto g = symmetric_group();
  ElementSet all = g->empty_set();
  all.set();
  for (auto _ : state) benchmark::DoNotOptimize(commutator_values_reference(*g, all, all));
}

void BM_ClassKernelSerial(benchmark::State& state) {
  const auto g = symmetric_group();
  const ClassSet all = all_classes(*g);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_classes(*g, all, all, Execution::serial));
}

void BM_ClassKernelParallel(benchmark::State& state) {
  const auto g = symmetric_group();
  const ClassSet all = all_classes(*g);
  for (auto _ : state) benchmark::DoNotOptimize(commutator_classes(*g, all, all, Execution::parallel));
}

void BM_TrialFanOut(benchmark::State& state) {
  TrialOptions opts;
  opts.exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(run_finite_trials(11, 16, opts));
}

}  // namespace

BENCHMARK(BM_ReferenceKernel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassKernelSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassKernelParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialFanOut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
