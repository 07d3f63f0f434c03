// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_EXACT_HPP
#define SUMFLOW_EXACT_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumflow/instance.hpp"
#include "sumflow/solution.hpp"

namespace sumflow {

/// Residual graph over an instance: one forward edge per arc plus its
/// paired backward edge (reverse of edge id e is e ^ 1). Forward residual
/// plus flow equals the original capacity; the backward residual is the
/// flow itself.
class ResidualNetwork {
 public:
  struct Edge {
    NodeId to = 0;
    FlowUnits residual = 0;
    CostValue cost = 0;
  };

  explicit ResidualNetwork(const FlowInstance& instance);
  ResidualNetwork(int node_count, std::span<const Arc> arcs);

  int node_count() const { return node_count_; }
  const std::vector<int>& edge_ids(NodeId node) const {
    return adjacency_[node];
  }
  const Edge& edge(int id) const { return edges_[id]; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Moves `amount` units across edge `id` (and back across its pair).
  void push(int id, FlowUnits amount);

  /// Flow currently assigned to forward edge 2k, i.e. instance arc k.
  FlowUnits flow_on_arc(int arc_index) const { return edges_[2 * arc_index + 1].residual; }

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;  // index 0 unused
};

/// One augmentation step of the exact solver: `amount` units along a path
/// whose per-unit cost is `unit_cost`.
struct Augmentation {
  FlowUnits amount = 0;
  CostValue unit_cost = 0;
};

struct ExactRun {
  FlowSolution solution;
  std::vector<Augmentation> augmentations;
};

/// Heuristic-vs-exact comparison on one instance. The gap fields are set
/// only when both solvers delivered the full supply.
struct GapReport {
  SolveStatus heuristic_status = SolveStatus::kCompleted;
  SolveStatus exact_status = SolveStatus::kCompleted;
  FlowUnits heuristic_shipped = 0;
  FlowUnits exact_shipped = 0;
  CostValue heuristic_cost = 0;
  CostValue exact_cost = 0;
  std::optional<CostValue> absolute_gap;
  std::optional<double> relative_gap;
};

/// Minimum-cost shipment of exactly `supply` units from node 1 to node n,
/// found by repeatedly augmenting along a cheapest residual path
/// (label-correcting shortest path, so negative backward costs are fine).
/// Status is kInfeasible when the network cannot carry the supply; the
/// flows then reflect the cheapest maximum shipment found.
FlowSolution solve_exact(const FlowInstance& instance);

/// solve_exact plus the per-augmentation log. Path unit costs are
/// non-decreasing across the log.
ExactRun solve_exact_detailed(const FlowInstance& instance);

/// Maximum amount shippable from node 1 to node n (0 when no path).
FlowUnits max_feasible_flow(const FlowInstance& instance);
FlowUnits max_feasible_flow(int node_count, std::span<const Arc> arcs);

/// Checks a solution against the instance: flows within capacities, flow
/// conservation at every node, and a total cost that matches the flows.
/// Returns one message per violation, empty when the solution is valid.
std::vector<std::string> verify_solution(const FlowInstance& instance,
                                         const FlowSolution& solution);

/// Runs both solvers and reports their costs and the optimality gap.
GapReport gap(const FlowInstance& instance);

}  // namespace sumflow

#endif  // SUMFLOW_EXACT_HPP
