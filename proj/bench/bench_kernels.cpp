// Serial reference against the OpenMP version of each sweep kernel.
// Argument 0 runs the serial loop, 1 the parallel one; both compute the same
// report, which is checked once per benchmark.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "comparo/kernels.hpp"

using namespace comparo;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) ? "parallel x" + std::to_string(omp_get_max_threads()) : "serial");
}

template <class Run>
void check_same(benchmark::State& state, Run run) {
  if (run(Execution::Serial) != run(Execution::Parallel)) state.SkipWithError("serial and parallel reports differ");
}

void BM_SoundnessIp(benchmark::State& state) {
  SoundnessConfig c;
  c.models = 500;
  auto run = [&](Execution e) { return soundness_sweep(Logic::IP, 1, c, e); };
  check_same(state, run);
  for (auto _ : state) benchmark::DoNotOptimize(run(mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.models));
  label(state);
}

void BM_Matching(benchmark::State& state) {
  MatchingConfig c;
  c.trials = 5000;
  auto run = [&](Execution e) { return matching_sweep(2, c, e); };
  check_same(state, run);
  for (auto _ : state) benchmark::DoNotOptimize(run(mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.trials));
  label(state);
}

void BM_BalancedSequences(benchmark::State& state) {
  BalancedConfig c;
  auto run = [&](Execution e) { return balanced_sweep(3, c, e); };
  check_same(state, run);
  for (auto _ : state) benchmark::DoNotOptimize(run(mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.instances));
  label(state);
}

void BM_TranslationAudit(benchmark::State& state) {
  TransformConfig c;
  c.models = 50;
  c.max_measures = 2;
  c.max_den = 3;
  auto run = [&](Execution e) { return transform_sweep(4, c, e); };
  check_same(state, run);
  for (auto _ : state) benchmark::DoNotOptimize(run(mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.models));
  label(state);
}

void BM_OracleAgreement(benchmark::State& state) {
  OracleConfig c;
  c.formulas = 100;
  auto run = [&](Execution e) { return oracle_sweep(5, c, e); };
  check_same(state, run);
  for (auto _ : state) benchmark::DoNotOptimize(run(mode(state)));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * c.formulas));
  label(state);
}

}  // namespace

BENCHMARK(BM_SoundnessIp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Matching)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BalancedSequences)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TranslationAudit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
