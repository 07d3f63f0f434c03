// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/instance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sumflow {

FlowInstance::FlowInstance(int node_count, std::vector<Arc> arcs,
                           FlowUnits supply)
    : node_count_(node_count), arcs_(std::move(arcs)), supply_(supply) {
  if (node_count_ < 2) {
    throw std::invalid_argument("instance needs at least 2 nodes, got " +
                                std::to_string(node_count_));
  }
  if (supply_ < 0) {
    throw std::invalid_argument("supply must be nonnegative, got " +
                                std::to_string(supply_));
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.head < b.head;
  });
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& arc = arcs_[i];
    const std::string where = "arc " + std::to_string(arc.tail) + "->" +
                              std::to_string(arc.head);
    if (arc.tail < 1 || arc.head > node_count_) {
      throw std::invalid_argument(where + ": node out of range 1.." +
                                  std::to_string(node_count_));
    }
    if (arc.tail >= arc.head) {
      throw std::invalid_argument(where + ": tail must be below head");
    }
    if (arc.capacity < 0) {
      throw std::invalid_argument(where + ": negative capacity " +
                                  std::to_string(arc.capacity));
    }
    if (arc.cost < 0) {
      throw std::invalid_argument(where + ": negative cost " +
                                  std::to_string(arc.cost));
    }
    if (i > 0 && arcs_[i - 1].tail == arc.tail &&
        arcs_[i - 1].head == arc.head) {
      throw std::invalid_argument(where + ": duplicate arc");
    }
  }
}

const Arc* FlowInstance::find_arc(NodeId tail, NodeId head) const {
  auto it = std::lower_bound(
      arcs_.begin(), arcs_.end(), std::pair{tail, head},
      [](const Arc& a, const std::pair<NodeId, NodeId>& key) {
        return a.tail != key.first ? a.tail < key.first : a.head < key.second;
      });
  if (it == arcs_.end() || it->tail != tail || it->head != head) {
    return nullptr;
  }
  return &*it;
}

FlowInstance FlowInstance::with_supply(FlowUnits supply) const {
  return FlowInstance(node_count_, arcs_, supply);
}

}  // namespace sumflow
