// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/tableau.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "sumflow/generator.hpp"
#include "sumflow/heuristic.hpp"

namespace sumflow {
namespace {

const FlowInstance& example(int number) {
  return reference_fixtures()[static_cast<std::size_t>(number) - 1].instance;
}

bool mentions(const std::vector<std::string>& issues,
              const std::string& needle) {
  return std::any_of(issues.begin(), issues.end(), [&](const std::string& s) {
    return s.find(needle) != std::string::npos;
  });
}

TEST(TableauTest, BuildsExample1) {
  const Tableau tab(example(1));
  EXPECT_EQ(tab.node_count(), 5);
  EXPECT_EQ(tab.supply(), 12);

  // First row of residuals and first column of costs.
  EXPECT_EQ(tab.residual(1, 2), 7);
  EXPECT_EQ(tab.residual(1, 3), 0);
  EXPECT_EQ(tab.residual(1, 4), 5);
  EXPECT_EQ(tab.residual(1, 5), 0);
  EXPECT_EQ(tab.unit_cost(1, 2), 3);
  EXPECT_EQ(tab.unit_cost(1, 3), std::nullopt);
  EXPECT_EQ(tab.unit_cost(1, 4), 6);
  EXPECT_EQ(tab.unit_cost(1, 5), std::nullopt);

  EXPECT_EQ(tab.rhs(1), 12);
  for (NodeId node = 2; node <= 5; ++node) {
    EXPECT_EQ(tab.rhs(node), 0) << "node " << node;
  }
}

TEST(TableauTest, BuildsSmallestInstance) {
  const Tableau tab(FlowInstance(2, {{1, 2, 5, 1}}, 5));
  EXPECT_EQ(tab.node_count(), 2);
  EXPECT_EQ(tab.rhs(1), 5);
  EXPECT_EQ(tab.rhs(2), 0);
  EXPECT_EQ(tab.residual(1, 2), 5);
  EXPECT_EQ(tab.unit_cost(1, 2), 1);
}

TEST(TableauTest, BuildsExample2) {
  const Tableau tab(example(2));
  EXPECT_EQ(tab.node_count(), 4);
  EXPECT_EQ(tab.rhs(1), 4);
  EXPECT_EQ(tab.rhs(2), 0);
  EXPECT_EQ(tab.rhs(3), 0);
  EXPECT_EQ(tab.rhs(4), 0);
}

TEST(TableauTest, ZeroCapacityArcIsAbsent) {
  const Tableau tab(FlowInstance(3, {{1, 2, 0, 9}, {1, 3, 2, 1}}, 2));
  EXPECT_EQ(tab.residual(1, 2), 0);
  EXPECT_EQ(tab.unit_cost(1, 2), std::nullopt);
  EXPECT_EQ(tab.unit_cost(1, 3), 1);
}

TEST(CheckTableauTest, FreshTableauIsConsistent) {
  EXPECT_TRUE(check_tableau(Tableau(example(1)), 12).empty());
}

TEST(CheckTableauTest, FlagsPositiveBalanceBehindSource) {
  const int n = 5;
  Tableau tab = Tableau::from_parts(
      n, std::vector<FlowUnits>(n * n, 0),
      std::vector<std::optional<CostValue>>(n * n, std::nullopt),
      {12, 1, 0, 0, 0}, 13);
  const auto issues = check_tableau(tab, 13);
  EXPECT_TRUE(mentions(issues, "sign violation at node 2")) << issues.size();
}

TEST(CheckTableauTest, FlagsBalanceSumMismatch) {
  const int n = 2;
  Tableau tab = Tableau::from_parts(
      n, std::vector<FlowUnits>(n * n, 0),
      std::vector<std::optional<CostValue>>(n * n, std::nullopt), {3, 0}, 3);
  EXPECT_TRUE(mentions(check_tableau(tab, 5), "expected supply 5"));
  EXPECT_TRUE(check_tableau(tab, 3).empty());
}

TEST(CheckTableauTest, FlagsCapacityWithoutCost) {
  const int n = 2;
  Tableau tab = Tableau::from_parts(
      n, {0, 4, 0, 0},
      std::vector<std::optional<CostValue>>(n * n, std::nullopt), {1, 0}, 1);
  EXPECT_TRUE(mentions(check_tableau(tab, 1), "capacity without cost"));
}

TEST(CheckTableauTest, HoldsAfterReplayedDispatches) {
  Tableau tab(example(1));
  for (int step = 0; step < 3; ++step) {
    const auto sender = select_sender(tab);
    ASSERT_TRUE(sender.has_value());
    const auto receiver = select_receiver(score_receivers(tab, *sender));
    ASSERT_TRUE(receiver.has_value());
    dispatch(tab, *sender, *receiver);
    EXPECT_TRUE(check_tableau(tab, 12).empty()) << "after step " << step + 1;
  }
  FlowUnits magnitude_sum = 0;
  for (NodeId node = 1; node <= tab.node_count(); ++node) {
    magnitude_sum += std::abs(tab.rhs(node));
  }
  EXPECT_EQ(magnitude_sum, 12);
}

}  // namespace
}  // namespace sumflow
