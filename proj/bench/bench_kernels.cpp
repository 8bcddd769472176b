// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "sebp/bounds.hpp"
#include "sebp/evaluation.hpp"
#include "sebp/policies.hpp"

namespace {

sebp::Instance mc_instance() {
  using sebp::Distribution;
  std::vector<Distribution> jobs;
  for (int j = 0; j < 24; ++j) {
    switch (j % 4) {
      case 0: jobs.push_back(Distribution::lognormal(-0.7, 0.6)); break;
      case 1: jobs.push_back(Distribution::gamma(1.5, 0.4)); break;
      case 2: jobs.push_back(Distribution::weibull(1.2, 0.5)); break;
      default: jobs.push_back(Distribution::uniform(0.1, 0.9)); break;
    }
  }
  return sebp::Instance(6, std::move(jobs));
}

sebp::Instance enumeration_instance() {
  sebp::RandomInstanceSpec spec;
  spec.n = 11;
  spec.m = 3;
  spec.seed = 5;
  spec.recipe = sebp::FiniteRecipe{3, 1.5};
  return sebp::gen_random(spec);
}

sebp::McOptions mc_options(int threads) {
  sebp::McOptions o;
  o.samples = 200'000;
  o.seed = 1;
  o.threads = threads;
  return o;
}

void BM_MonteCarloSerial(benchmark::State& state) {
  const auto inst = mc_instance();
  const sebp::Policy policy = sebp::LeptPPolicy{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sebp::expected_cost_mc_reference(inst, policy, mc_options(1)));
  }
}

void BM_MonteCarloParallel(benchmark::State& state) {
  const auto inst = mc_instance();
  const sebp::Policy policy = sebp::LeptPPolicy{};
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sebp::expected_cost_mc(inst, policy, mc_options(threads)));
  }
}

void BM_ClairvoyantSerial(benchmark::State& state) {
  const auto inst = enumeration_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sebp::expected_opt_anticipative_reference(inst));
  }
}

void BM_ClairvoyantParallel(benchmark::State& state) {
  const auto inst = enumeration_instance();
  sebp::ScenarioOptions o;
  o.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sebp::expected_opt_anticipative(inst, o));
  }
}

void BM_TableSerial(benchmark::State& state) {
  const auto deltas = sebp::default_table_deltas();
  const auto rows = sebp::default_table_rows();
  for (auto _ : state) benchmark::DoNotOptimize(sebp::table_1_reference(deltas, rows));
}

void BM_TableParallel(benchmark::State& state) {
  const auto deltas = sebp::default_table_deltas();
  const auto rows = sebp::default_table_rows();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sebp::table_1(deltas, rows, threads));
}

}  // namespace

BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonteCarloParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ClairvoyantSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClairvoyantParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
