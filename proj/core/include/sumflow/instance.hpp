// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_INSTANCE_HPP
#define SUMFLOW_INSTANCE_HPP

#include <cstdint>
#include <vector>

namespace sumflow {

using NodeId = int;
using FlowUnits = std::int64_t;
using CostValue = std::int64_t;

/// One forward arc of the network. Arcs always point from a lower-numbered
/// node to a higher-numbered one.
struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  FlowUnits capacity = 0;
  CostValue cost = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A single-source/single-sink min-cost flow problem on an index-ordered DAG.
///
/// Nodes are labeled 1..n. Node 1 injects `supply` units and node n absorbs
/// them. At most one arc may join an ordered pair, every arc satisfies
/// tail < head, and all capacities, costs and the supply are nonnegative
/// integers. Construction validates the shape and throws
/// std::invalid_argument on violations; instances are immutable afterwards
/// and safe to share across threads.
class FlowInstance {
 public:
  FlowInstance(int node_count, std::vector<Arc> arcs, FlowUnits supply);

  int node_count() const { return node_count_; }
  FlowUnits supply() const { return supply_; }

  /// Arcs in canonical (tail, head) order.
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Looks up the arc tail->head, or nullptr if absent.
  const Arc* find_arc(NodeId tail, NodeId head) const;

  /// Copy of this instance carrying a different supply.
  FlowInstance with_supply(FlowUnits supply) const;

  friend bool operator==(const FlowInstance&, const FlowInstance&) = default;

 private:
  int node_count_ = 0;
  std::vector<Arc> arcs_;
  FlowUnits supply_ = 0;
};

}  // namespace sumflow

#endif  // SUMFLOW_INSTANCE_HPP
