// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_SOLUTION_HPP
#define SUMFLOW_SOLUTION_HPP

#include <map>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "sumflow/instance.hpp"

namespace sumflow {

enum class SolveStatus {
  kCompleted,   // all supply delivered to node n
  kStranded,    // a node still holds units but has no usable outgoing arc
  kInfeasible,  // the network cannot carry the requested supply
};

std::string_view to_string(SolveStatus status);

/// One shipment of `quantity` units along the arc sender->receiver.
struct DispatchEvent {
  NodeId sender = 0;
  NodeId receiver = 0;
  FlowUnits quantity = 0;
  CostValue unit_cost = 0;
  CostValue leg_cost = 0;  // quantity * unit_cost

  friend bool operator==(const DispatchEvent&, const DispatchEvent&) = default;
};

/// Per-arc flow assignment plus how it was produced.
///
/// `trace` lists the heuristic's shipments in dispatch order and is empty
/// for the exact solver. `shipped` counts the units that reached node n;
/// it equals the instance supply exactly when status is kCompleted.
struct FlowSolution {
  std::map<std::pair<NodeId, NodeId>, FlowUnits> arc_flows;
  CostValue total_cost = 0;
  SolveStatus status = SolveStatus::kCompleted;
  std::vector<DispatchEvent> trace;
  FlowUnits shipped = 0;

  friend bool operator==(const FlowSolution&, const FlowSolution&) = default;
};

/// Sum of leg costs over a dispatch log.
CostValue total_cost(std::span<const DispatchEvent> trace);

}  // namespace sumflow

#endif  // SUMFLOW_SOLUTION_HPP
