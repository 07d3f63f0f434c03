// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/solution.hpp"

namespace sumflow {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kCompleted:
      return "completed";
    case SolveStatus::kStranded:
      return "stranded";
    case SolveStatus::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

CostValue total_cost(std::span<const DispatchEvent> trace) {
  CostValue sum = 0;
  for (const DispatchEvent& event : trace) {
    sum += event.leg_cost;
  }
  return sum;
}

}  // namespace sumflow
