// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_TABLEAU_HPP
#define SUMFLOW_TABLEAU_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sumflow/instance.hpp"
#include "sumflow/solution.hpp"

namespace sumflow {

/// Square working table for the summation heuristic.
///
/// Entry (i, j) above the diagonal holds the remaining capacity of arc
/// i->j; entry (j, i) below the diagonal holds that arc's unit cost, or
/// nothing when the arc is absent. The balance column (`rhs`) tracks
/// undispatched units: positive at node 1, negative at every node that has
/// received units, zero elsewhere. The sum of balance magnitudes stays
/// equal to the supply throughout a solve.
///
/// Arcs with zero capacity are treated as absent from the start, so an
/// absent cost entry implies a zero capacity entry at construction time.
class Tableau {
 public:
  explicit Tableau(const FlowInstance& instance);

  /// Assembles a tableau from raw matrices without validating anything.
  /// Meant for replay and inspection tooling; run check_tableau to test
  /// the invariants. Matrices are row-major with node_count^2 entries,
  /// `rhs` has node_count entries for nodes 1..n.
  static Tableau from_parts(int node_count, std::vector<FlowUnits> residual,
                            std::vector<std::optional<CostValue>> cost,
                            std::vector<FlowUnits> rhs, FlowUnits supply);

  int node_count() const { return node_count_; }
  FlowUnits supply() const { return supply_; }

  /// Remaining capacity of arc tail->head. Requires tail < head.
  FlowUnits residual(NodeId tail, NodeId head) const;

  /// Unit cost of arc tail->head, nullopt when the arc is absent.
  /// Requires tail < head.
  std::optional<CostValue> unit_cost(NodeId tail, NodeId head) const;

  /// Signed balance of `node` (1-based).
  FlowUnits rhs(NodeId node) const;

  friend DispatchEvent dispatch(Tableau& tab, NodeId sender, NodeId receiver);

 private:
  Tableau() = default;
  std::size_t at(NodeId row, NodeId col) const {
    return static_cast<std::size_t>(row - 1) * node_count_ + (col - 1);
  }

  int node_count_ = 0;
  FlowUnits supply_ = 0;
  std::vector<FlowUnits> residual_;             // meaningful above the diagonal
  std::vector<std::optional<CostValue>> cost_;  // meaningful below the diagonal
  std::vector<FlowUnits> rhs_;                  // index 0 unused
};

/// Checks the tableau invariants against the given supply. Returns one
/// message per violation; an empty list means the tableau is consistent.
std::vector<std::string> check_tableau(const Tableau& tab, FlowUnits supply);

}  // namespace sumflow

#endif  // SUMFLOW_TABLEAU_HPP
