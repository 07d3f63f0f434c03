// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_GENERATOR_HPP
#define SUMFLOW_GENERATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sumflow/instance.hpp"

namespace sumflow {

/// How the generated instance's supply is chosen.
enum class SupplyMode {
  kMaxFlow,  // supply = maximum feasible flow of the generated network
  kFixed,    // supply = GenConfig::fixed_supply
};

struct GenConfig {
  int node_count = 10;
  double density = 0.3;  // probability of each optional forward arc
  FlowUnits cap_min = 1;
  FlowUnits cap_max = 15;
  CostValue cost_min = 1;
  CostValue cost_max = 15;
  std::uint64_t seed = 0;
  SupplyMode supply_mode = SupplyMode::kMaxFlow;
  FlowUnits fixed_supply = 1;
};

/// Draws a random instance. The chain arcs (i, i+1) are always present so
/// the network is connected and has positive max flow; every other upward
/// pair (i, j) is included with probability `density`. Capacities and
/// costs are uniform over the configured ranges.
///
/// Fully deterministic for a given config: the engine is mt19937_64
/// seeded with `seed`, pairs are visited in row-major order, and each
/// pair draws its presence first and then capacity and cost. The same
/// config yields the identical instance on every platform.
FlowInstance generate(const GenConfig& config);

/// A named built-in instance with its published best-known total cost.
struct ReferenceFixture {
  std::string name;
  FlowInstance instance;
  CostValue reported_cost = 0;
};

/// The nine built-in benchmark networks ("example1" .. "example9").
/// The first three carry their original supplies; the rest default to
/// their maximum feasible flow.
const std::vector<ReferenceFixture>& reference_fixtures();

}  // namespace sumflow

#endif  // SUMFLOW_GENERATOR_HPP
