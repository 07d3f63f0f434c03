// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/exact.hpp"

#include "sumflow/heuristic.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace sumflow {

namespace {

constexpr CostValue kUnreached = std::numeric_limits<CostValue>::max();

/// Cheapest residual path from node 1 to node `sink` by label correcting
/// (SPFA). Backward residual edges carry negative costs, so Dijkstra
/// without potentials would not do; the residual graph never holds a
/// negative cycle, so relaxation terminates. Fills `parent_edge` with the
/// edge ids of the path tree and returns the sink's distance, or
/// kUnreached when the sink cannot be reached.
CostValue cheapest_path(const ResidualNetwork& net, NodeId sink,
                        std::vector<int>& parent_edge) {
  const int n = net.node_count();
  std::vector<CostValue> dist(static_cast<std::size_t>(n) + 1, kUnreached);
  std::vector<bool> queued(static_cast<std::size_t>(n) + 1, false);
  parent_edge.assign(static_cast<std::size_t>(n) + 1, -1);
  std::deque<NodeId> queue;
  dist[1] = 0;
  queue.push_back(1);
  queued[1] = true;
  while (!queue.empty()) {
    const NodeId node = queue.front();
    queue.pop_front();
    queued[node] = false;
    for (int id : net.edge_ids(node)) {
      const auto& edge = net.edge(id);
      if (edge.residual == 0) {
        continue;
      }
      const CostValue candidate = dist[node] + edge.cost;
      if (candidate < dist[edge.to]) {
        dist[edge.to] = candidate;
        parent_edge[edge.to] = id;
        if (!queued[edge.to]) {
          queue.push_back(edge.to);
          queued[edge.to] = true;
        }
      }
    }
  }
  return dist[sink];
}

/// Blocking-flow max flow (Dinic) used to size the network's capacity.
class MaxFlowSolver {
 public:
  MaxFlowSolver(int node_count, std::span<const Arc> arcs)
      : net_(node_count, arcs),
        level_(static_cast<std::size_t>(node_count) + 1),
        next_(static_cast<std::size_t>(node_count) + 1) {}

  FlowUnits run() {
    const NodeId sink = net_.node_count();
    FlowUnits total = 0;
    while (build_levels(sink)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (FlowUnits pushed = augment(1, sink, kInfiniteFlow)) {
        total += pushed;
      }
    }
    return total;
  }

 private:
  static constexpr FlowUnits kInfiniteFlow =
      std::numeric_limits<FlowUnits>::max();

  bool build_levels(NodeId sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<NodeId> queue{1};
    level_[1] = 0;
    while (!queue.empty()) {
      const NodeId node = queue.front();
      queue.pop_front();
      for (int id : net_.edge_ids(node)) {
        const auto& edge = net_.edge(id);
        if (edge.residual > 0 && level_[edge.to] < 0) {
          level_[edge.to] = level_[node] + 1;
          queue.push_back(edge.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  FlowUnits augment(NodeId node, NodeId sink, FlowUnits limit) {
    if (node == sink) {
      return limit;
    }
    const auto& ids = net_.edge_ids(node);
    for (std::size_t& i = next_[node]; i < ids.size(); ++i) {
      const int id = ids[i];
      const auto& edge = net_.edge(id);
      if (edge.residual == 0 || level_[edge.to] != level_[node] + 1) {
        continue;
      }
      const FlowUnits pushed =
          augment(edge.to, sink, std::min(limit, edge.residual));
      if (pushed > 0) {
        net_.push(id, pushed);
        return pushed;
      }
    }
    return 0;
  }

  ResidualNetwork net_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

ResidualNetwork::ResidualNetwork(const FlowInstance& instance)
    : ResidualNetwork(instance.node_count(), instance.arcs()) {}

ResidualNetwork::ResidualNetwork(int node_count, std::span<const Arc> arcs)
    : node_count_(node_count),
      adjacency_(static_cast<std::size_t>(node_count) + 1) {
  edges_.reserve(arcs.size() * 2);
  for (const Arc& arc : arcs) {
    adjacency_[arc.tail].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({arc.head, arc.capacity, arc.cost});
    adjacency_[arc.head].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({arc.tail, 0, -arc.cost});
  }
}

void ResidualNetwork::push(int id, FlowUnits amount) {
  assert(amount >= 0 && amount <= edges_[id].residual);
  edges_[id].residual -= amount;
  edges_[id ^ 1].residual += amount;
}

ExactRun solve_exact_detailed(const FlowInstance& instance) {
  ExactRun run;
  ResidualNetwork net(instance);
  const NodeId sink = instance.node_count();
  FlowUnits remaining = instance.supply();
  std::vector<int> parent_edge;
  while (remaining > 0) {
    const CostValue unit_cost = cheapest_path(net, sink, parent_edge);
    if (unit_cost == kUnreached) {
      break;
    }
    // Path bottleneck, then push; walking parent edges backward from the
    // sink reaches node 1 because the path tree is rooted there.
    FlowUnits amount = remaining;
    for (NodeId node = sink; node != 1; node = net.edge(parent_edge[node] ^ 1).to) {
      amount = std::min(amount, net.edge(parent_edge[node]).residual);
    }
    for (NodeId node = sink; node != 1; node = net.edge(parent_edge[node] ^ 1).to) {
      net.push(parent_edge[node], amount);
    }
    remaining -= amount;
    run.augmentations.push_back({amount, unit_cost});
  }

  FlowSolution& solution = run.solution;
  solution.status =
      remaining == 0 ? SolveStatus::kCompleted : SolveStatus::kInfeasible;
  solution.shipped = instance.supply() - remaining;
  const auto& arcs = instance.arcs();
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const FlowUnits flow = net.flow_on_arc(static_cast<int>(k));
    if (flow > 0) {
      solution.arc_flows[{arcs[k].tail, arcs[k].head}] = flow;
      solution.total_cost += flow * arcs[k].cost;
    }
  }
  return run;
}

FlowSolution solve_exact(const FlowInstance& instance) {
  return solve_exact_detailed(instance).solution;
}

FlowUnits max_feasible_flow(int node_count, std::span<const Arc> arcs) {
  return MaxFlowSolver(node_count, arcs).run();
}

FlowUnits max_feasible_flow(const FlowInstance& instance) {
  return max_feasible_flow(instance.node_count(), instance.arcs());
}

std::vector<std::string> verify_solution(const FlowInstance& instance,
                                         const FlowSolution& solution) {
  std::vector<std::string> issues;
  const int n = instance.node_count();
  std::vector<FlowUnits> net_outflow(static_cast<std::size_t>(n) + 1, 0);
  CostValue cost = 0;
  for (const auto& [key, flow] : solution.arc_flows) {
    const auto [tail, head] = key;
    const std::string where =
        "arc " + std::to_string(tail) + "->" + std::to_string(head);
    const Arc* arc = instance.find_arc(tail, head);
    if (arc == nullptr) {
      issues.push_back(where + ": flow on a missing arc");
      continue;
    }
    if (flow < 0) {
      issues.push_back(where + ": negative flow " + std::to_string(flow));
    }
    if (flow > arc->capacity) {
      issues.push_back(where + ": flow " + std::to_string(flow) +
                       " exceeds capacity " + std::to_string(arc->capacity));
    }
    net_outflow[tail] += flow;
    net_outflow[head] -= flow;
    cost += flow * arc->cost;
  }
  for (NodeId node = 2; node < n; ++node) {
    if (net_outflow[node] != 0) {
      issues.push_back("node " + std::to_string(node) +
                       ": imbalance " + std::to_string(-net_outflow[node]));
    }
  }
  if (net_outflow[1] != solution.shipped) {
    issues.push_back("source emits " + std::to_string(net_outflow[1]) +
                     " units but the solution reports " +
                     std::to_string(solution.shipped) + " shipped");
  }
  if (n >= 2 && -net_outflow[n] != solution.shipped) {
    issues.push_back("sink absorbs " + std::to_string(-net_outflow[n]) +
                     " units but the solution reports " +
                     std::to_string(solution.shipped) + " shipped");
  }
  if (cost != solution.total_cost) {
    issues.push_back("flows cost " + std::to_string(cost) +
                     " but the solution reports " +
                     std::to_string(solution.total_cost));
  }
  if (solution.status == SolveStatus::kCompleted &&
      solution.shipped != instance.supply()) {
    issues.push_back("completed solution shipped " +
                     std::to_string(solution.shipped) + " of " +
                     std::to_string(instance.supply()) + " units");
  }
  return issues;
}

GapReport gap(const FlowInstance& instance) {
  const FlowSolution heuristic = run_heuristic(instance);
  const FlowSolution exact = solve_exact(instance);
  GapReport report;
  report.heuristic_status = heuristic.status;
  report.exact_status = exact.status;
  report.heuristic_shipped = heuristic.shipped;
  report.exact_shipped = exact.shipped;
  report.heuristic_cost = heuristic.total_cost;
  report.exact_cost = exact.total_cost;
  if (heuristic.status == SolveStatus::kCompleted &&
      exact.status == SolveStatus::kCompleted) {
    report.absolute_gap = heuristic.total_cost - exact.total_cost;
    report.relative_gap =
        exact.total_cost == 0
            ? 0.0
            : static_cast<double>(*report.absolute_gap) / exact.total_cost;
  }
  return report;
}

}  // namespace sumflow
