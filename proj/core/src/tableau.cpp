// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/tableau.hpp"

#include <cassert>
#include <cstdlib>
#include <string>
#include <utility>

namespace sumflow {

namespace {

std::string pair_name(NodeId tail, NodeId head) {
  return "(" + std::to_string(tail) + ", " + std::to_string(head) + ")";
}

}  // namespace

Tableau::Tableau(const FlowInstance& instance)
    : node_count_(instance.node_count()), supply_(instance.supply()) {
  const std::size_t cells =
      static_cast<std::size_t>(node_count_) * node_count_;
  residual_.assign(cells, 0);
  cost_.assign(cells, std::nullopt);
  rhs_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  for (const Arc& arc : instance.arcs()) {
    if (arc.capacity == 0) {
      continue;  // capacity 0 and no arc are the same thing here
    }
    residual_[at(arc.tail, arc.head)] = arc.capacity;
    cost_[at(arc.head, arc.tail)] = arc.cost;
  }
  rhs_[1] = supply_;
}

Tableau Tableau::from_parts(int node_count, std::vector<FlowUnits> residual,
                            std::vector<std::optional<CostValue>> cost,
                            std::vector<FlowUnits> rhs, FlowUnits supply) {
  Tableau tab;
  tab.node_count_ = node_count;
  tab.supply_ = supply;
  tab.residual_ = std::move(residual);
  tab.cost_ = std::move(cost);
  tab.rhs_.assign(static_cast<std::size_t>(node_count) + 1, 0);
  for (int node = 1; node <= node_count; ++node) {
    tab.rhs_[node] = rhs[static_cast<std::size_t>(node) - 1];
  }
  return tab;
}

FlowUnits Tableau::residual(NodeId tail, NodeId head) const {
  assert(tail < head);
  return residual_[at(tail, head)];
}

std::optional<CostValue> Tableau::unit_cost(NodeId tail, NodeId head) const {
  assert(tail < head);
  return cost_[at(head, tail)];
}

FlowUnits Tableau::rhs(NodeId node) const {
  assert(node >= 1 && node <= node_count_);
  return rhs_[node];
}

std::vector<std::string> check_tableau(const Tableau& tab, FlowUnits supply) {
  std::vector<std::string> issues;
  const int n = tab.node_count();
  FlowUnits magnitude_sum = 0;
  for (int node = 1; node <= n; ++node) {
    const FlowUnits balance = tab.rhs(node);
    magnitude_sum += balance < 0 ? -balance : balance;
    if (node == 1 && balance < 0) {
      issues.push_back("sign violation at node 1: balance " +
                       std::to_string(balance) + " is negative");
    }
    if (node > 1 && balance > 0) {
      issues.push_back("sign violation at node " + std::to_string(node) +
                       ": balance " + std::to_string(balance) +
                       " is positive");
    }
  }
  if (magnitude_sum != supply) {
    issues.push_back("balance magnitudes sum to " +
                     std::to_string(magnitude_sum) + ", expected supply " +
                     std::to_string(supply));
  }
  for (int tail = 1; tail <= n; ++tail) {
    for (int head = tail + 1; head <= n; ++head) {
      const FlowUnits residual = tab.residual(tail, head);
      const bool has_cost = tab.unit_cost(tail, head).has_value();
      if (residual < 0) {
        issues.push_back("negative residual at " + pair_name(tail, head));
      }
      if (residual > 0 && !has_cost) {
        issues.push_back("capacity without cost at " + pair_name(tail, head));
      }
    }
  }
  return issues;
}

}  // namespace sumflow
