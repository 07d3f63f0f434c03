// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/generator.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "sumflow/exact.hpp"

namespace sumflow {

namespace {

// The draws below avoid std::uniform_*_distribution on purpose: the
// standard does not pin those down, and the seed-to-instance mapping is
// part of the compatibility contract.

/// Uniform value in [0, range) by rejection, bias-free.
std::uint64_t next_below(std::mt19937_64& rng, std::uint64_t range) {
  const std::uint64_t limit = -range % range;  // 2^64 mod range
  std::uint64_t draw = rng();
  while (draw < limit) {
    draw = rng();
  }
  return draw % range;
}

long long next_in_range(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  next_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Uniform double in [0, 1) from the top 53 bits.
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void validate(const GenConfig& config) {
  if (config.node_count < 2) {
    throw std::invalid_argument("node_count must be at least 2, got " +
                                std::to_string(config.node_count));
  }
  if (!(config.density > 0.0) || config.density > 1.0) {
    throw std::invalid_argument("density must be in (0, 1], got " +
                                std::to_string(config.density));
  }
  if (config.cap_min < 1 || config.cap_max < config.cap_min) {
    throw std::invalid_argument("capacity range must satisfy 1 <= lo <= hi");
  }
  if (config.cost_min < 1 || config.cost_max < config.cost_min) {
    throw std::invalid_argument("cost range must satisfy 1 <= lo <= hi");
  }
  if (config.supply_mode == SupplyMode::kFixed && config.fixed_supply < 0) {
    throw std::invalid_argument("fixed supply must be nonnegative, got " +
                                std::to_string(config.fixed_supply));
  }
}

}  // namespace

FlowInstance generate(const GenConfig& config) {
  validate(config);
  std::mt19937_64 rng(config.seed);
  std::vector<Arc> arcs;
  // Draw order contract: pairs in row-major order; a chain pair (i, i+1)
  // draws capacity then cost; any other pair draws presence first and only
  // a present pair goes on to draw capacity then cost.
  for (NodeId tail = 1; tail < config.node_count; ++tail) {
    for (NodeId head = tail + 1; head <= config.node_count; ++head) {
      if (head != tail + 1 && next_unit(rng) >= config.density) {
        continue;
      }
      Arc arc;
      arc.tail = tail;
      arc.head = head;
      arc.capacity = next_in_range(rng, config.cap_min, config.cap_max);
      arc.cost = next_in_range(rng, config.cost_min, config.cost_max);
      arcs.push_back(arc);
    }
  }
  const FlowUnits supply = config.supply_mode == SupplyMode::kFixed
                               ? config.fixed_supply
                               : max_feasible_flow(config.node_count, arcs);
  return FlowInstance(config.node_count, std::move(arcs), supply);
}

}  // namespace sumflow
