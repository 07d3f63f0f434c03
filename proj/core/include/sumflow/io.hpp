// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#ifndef SUMFLOW_IO_HPP
#define SUMFLOW_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumflow/instance.hpp"
#include "sumflow/solution.hpp"

namespace sumflow {

/// Raised by the parsers; the message names the offending line or token.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix form of an instance: a single n x n table with capacities above
/// the diagonal, unit costs below it (absent arc = no value, written as
/// "inf"), a zero diagonal, and an optional supply annotation.
///
/// Text layout: the node count, then the n^2 entries in row-major order
/// separated by arbitrary whitespace, then optionally "s <supply>".
struct MatrixForm {
  int node_count = 0;
  std::vector<std::optional<long long>> entries;  // row-major
  std::optional<FlowUnits> supply;

  static MatrixForm from_instance(const FlowInstance& instance);

  /// Builds the instance: one arc per pair with positive capacity and a
  /// finite cost. When no supply is annotated, it defaults to the maximum
  /// feasible flow of the parsed network. Throws ParseError on semantic
  /// violations (capacity without a cost, negative entries, ...).
  FlowInstance to_instance() const;
};

FlowInstance parse_matrix(std::string_view text);

/// Canonical matrix text: one line for the node count, one per row with
/// single-space separation, and an explicit trailing supply line. LF line
/// endings. parse_matrix(write_matrix(x)) == x.
std::string write_matrix(const FlowInstance& instance);

/// Reads DIMACS min-cost-flow text: "c" comments, one "p min <nodes>
/// <arcs>" header, "n <id> <flux>" lines (exactly one positive source and
/// one negative sink with matching magnitude), and "a <src> <dst> <low>
/// <cap> <cost>" arcs with low = 0. The graph must be acyclic; nodes are
/// relabeled by a deterministic topological order (source first, then by
/// original id, sink last) so that every arc points upward.
FlowInstance parse_dimacs(std::string_view text);

/// DIMACS text for an instance: header, the two node lines, then arcs in
/// canonical order with a zero lower bound. LF line endings.
std::string write_dimacs(const FlowInstance& instance);

/// Dispatch log as CSV with header
/// step,sender,receiver,quantity,unit_cost,leg_cost,cumulative_cost
/// (LF line endings). The cumulative column is the prefix sum of leg
/// costs; the final row's value equals the solution's total cost.
std::string write_trace(const FlowSolution& solution);

}  // namespace sumflow

#endif  // SUMFLOW_IO_HPP
