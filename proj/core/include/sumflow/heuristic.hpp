// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_HEURISTIC_HPP
#define SUMFLOW_HEURISTIC_HPP

#include <optional>
#include <span>
#include <vector>

#include "sumflow/instance.hpp"
#include "sumflow/solution.hpp"
#include "sumflow/tableau.hpp"

namespace sumflow {

/// Scoring of one receiver candidate for the current sender.
///
/// `direct_cost` is the unit cost of the arc sender->candidate and
/// `summation` adds the unit cost of the arc candidate->sink on top (zero
/// when the candidate is the sink itself). Either value is absent when an
/// involved arc does not exist. A candidate is feasible when the direct
/// arc has residual capacity left and the summation is finite.
struct ReceiverScore {
  NodeId candidate = 0;
  std::optional<CostValue> direct_cost;
  std::optional<CostValue> summation;
  bool feasible = false;

  friend bool operator==(const ReceiverScore&, const ReceiverScore&) = default;
};

/// Picks the next sender: the lowest-indexed node among 1..n-1 whose
/// balance is nonzero. The sink never sends. Returns nullopt when every
/// balance ahead of the sink is zero, which is the terminal state.
///
/// Senders are therefore processed strictly in index order: the source
/// first, then each receiving node once everything above it has drained.
/// This is the sweep the worked tables follow, and because units only ever
/// move to higher indices, a drained node can never be refilled.
std::optional<NodeId> select_sender(const Tableau& tab);

/// Scores every candidate i with sender < i <= n. Order follows the
/// candidate index.
std::vector<ReceiverScore> score_receivers(const Tableau& tab, NodeId sender);

/// Picks the feasible candidate with the minimum summation, ties going to
/// the lowest node index. Returns nullopt when no candidate is feasible.
std::optional<NodeId> select_receiver(std::span<const ReceiverScore> scores);

/// Ships q = min(|rhs[sender]|, residual capacity) units along
/// sender->receiver and updates the tableau: the residual and both
/// balances shrink by q (signs preserved), so the balance-magnitude sum is
/// unchanged. Throws std::logic_error when the arc has no residual
/// capacity or the sender holds no units.
DispatchEvent dispatch(Tableau& tab, NodeId sender, NodeId receiver);

/// Runs the full greedy loop: select a sender, score its receivers, ship
/// to the cheapest one, repeat until all balances ahead of the sink are
/// zero (kCompleted) or some sender has no feasible receiver (kStranded,
/// with the dispatches made so far). The result is deterministic.
FlowSolution run_heuristic(const FlowInstance& instance);

}  // namespace sumflow

#endif  // SUMFLOW_HEURISTIC_HPP
