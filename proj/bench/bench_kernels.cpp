// Serial reference against the OpenMP kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "strata/axioms.hpp"
#include "strata/corpus.hpp"
#include "strata/model_catalog.hpp"
#include "strata/suites.hpp"

using namespace strata;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void BM_CheckAxioms(benchmark::State& state) {
  const auto model = truncated_v_model(2, {"a", "b"});
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(model, kAllAxioms, mode_of(state)));
}

void BM_Corpus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_corpus(kDefaultSeed, 100, {}, mode_of(state)));
}

void BM_ConwayRandomized(benchmark::State& state) {
  SuiteConfig c;
  c.cases = 100;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(c, mode_of(state)));
}

void BM_BekicExhaustiveSmall(benchmark::State& state) {
  SuiteConfig c;
  c.suite = Suite::Bekic;
  c.exhaustive = true;
  c.max_model_size = 3;
  c.max_kappa = 2;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(c, mode_of(state)));
}

}  // namespace

BENCHMARK(BM_CheckAxioms)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Corpus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConwayRandomized)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BekicExhaustiveSmall)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
