// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/heuristic.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

namespace sumflow {

std::optional<NodeId> select_sender(const Tableau& tab) {
  for (NodeId node = 1; node < tab.node_count(); ++node) {
    if (tab.rhs(node) != 0) {
      return node;
    }
  }
  return std::nullopt;
}

std::vector<ReceiverScore> score_receivers(const Tableau& tab, NodeId sender) {
  const NodeId sink = tab.node_count();
  std::vector<ReceiverScore> scores;
  scores.reserve(static_cast<std::size_t>(sink - sender));
  for (NodeId candidate = sender + 1; candidate <= sink; ++candidate) {
    ReceiverScore score;
    score.candidate = candidate;
    score.direct_cost = tab.unit_cost(sender, candidate);
    if (score.direct_cost.has_value()) {
      // Hop two is the candidate's own arc to the sink; the sink itself
      // contributes nothing.
      if (candidate == sink) {
        score.summation = *score.direct_cost;
      } else if (auto onward = tab.unit_cost(candidate, sink)) {
        score.summation = *score.direct_cost + *onward;
      }
    }
    score.feasible =
        score.summation.has_value() && tab.residual(sender, candidate) > 0;
    scores.push_back(score);
  }
  return scores;
}

std::optional<NodeId> select_receiver(std::span<const ReceiverScore> scores) {
  std::optional<NodeId> best;
  CostValue best_summation = 0;
  for (const ReceiverScore& score : scores) {
    if (!score.feasible) {
      continue;
    }
    if (!best.has_value() || *score.summation < best_summation) {
      best = score.candidate;
      best_summation = *score.summation;
    }
  }
  return best;
}

DispatchEvent dispatch(Tableau& tab, NodeId sender, NodeId receiver) {
  const FlowUnits pending = std::abs(tab.rhs(sender));
  const FlowUnits room = tab.residual(sender, receiver);
  if (pending == 0) {
    throw std::logic_error("dispatch from node " + std::to_string(sender) +
                           " which holds no units");
  }
  if (room == 0) {
    throw std::logic_error("dispatch on exhausted arc " +
                           std::to_string(sender) + "->" +
                           std::to_string(receiver));
  }
  const FlowUnits quantity = pending < room ? pending : room;
  const CostValue unit_cost = *tab.cost_[tab.at(receiver, sender)];
  tab.residual_[tab.at(sender, receiver)] -= quantity;
  // Both balances move toward zero by the shipped amount: the sender keeps
  // its sign while it still holds units, the receiver goes (further)
  // negative.
  if (tab.rhs_[sender] > 0) {
    tab.rhs_[sender] -= quantity;
  } else {
    tab.rhs_[sender] += quantity;
  }
  tab.rhs_[receiver] -= quantity;

  DispatchEvent event;
  event.sender = sender;
  event.receiver = receiver;
  event.quantity = quantity;
  event.unit_cost = unit_cost;
  event.leg_cost = quantity * unit_cost;
  return event;
}

FlowSolution run_heuristic(const FlowInstance& instance) {
  Tableau tab(instance);
  FlowSolution solution;
  while (auto sender = select_sender(tab)) {
    const auto scores = score_receivers(tab, *sender);
    const auto receiver = select_receiver(scores);
    if (!receiver.has_value()) {
      solution.status = SolveStatus::kStranded;
      break;
    }
    const DispatchEvent event = dispatch(tab, *sender, *receiver);
    solution.trace.push_back(event);
    solution.arc_flows[{event.sender, event.receiver}] += event.quantity;
    solution.total_cost += event.leg_cost;
    if (event.receiver == instance.node_count()) {
      solution.shipped += event.quantity;
    }
  }
  return solution;
}

}  // namespace sumflow
