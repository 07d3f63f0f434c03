// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include <benchmark/benchmark.h>

#include "sumflow/exact.hpp"
#include "sumflow/generator.hpp"
#include "sumflow/heuristic.hpp"

namespace {

using namespace sumflow;

GenConfig config_for(int nodes) {
  GenConfig config;
  config.node_count = nodes;
  config.seed = 1;
  return config;
}

void BM_Generate(benchmark::State& state) {
  const GenConfig config = config_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate(config));
  }
}
BENCHMARK(BM_Generate)->Arg(100)->Arg(500)->Arg(1000);

void BM_Heuristic(benchmark::State& state) {
  const FlowInstance instance =
      generate(config_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_heuristic(instance));
  }
  state.counters["arcs"] = static_cast<double>(instance.arcs().size());
}
BENCHMARK(BM_Heuristic)->Arg(50)->Arg(100)->Arg(300)->Arg(500)->Arg(1000);

void BM_Exact(benchmark::State& state) {
  const FlowInstance instance =
      generate(config_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact(instance));
  }
}
BENCHMARK(BM_Exact)->Arg(50)->Arg(100)->Arg(300);

void BM_MaxFlow(benchmark::State& state) {
  const FlowInstance instance =
      generate(config_for(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_feasible_flow(instance));
  }
}
BENCHMARK(BM_MaxFlow)->Arg(100)->Arg(1000);

void BM_FixtureHeuristic(benchmark::State& state) {
  const auto& fixture =
      reference_fixtures()[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_heuristic(fixture.instance));
  }
  state.SetLabel(fixture.name);
}
BENCHMARK(BM_FixtureHeuristic)->DenseRange(0, 8);

}  // namespace

BENCHMARK_MAIN();
