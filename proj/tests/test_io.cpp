// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/io.hpp"

#include <gtest/gtest.h>

#include <string>

#include "sumflow/exact.hpp"
#include "sumflow/generator.hpp"
#include "sumflow/heuristic.hpp"

namespace sumflow {
namespace {

const FlowInstance& example(int number) {
  return reference_fixtures()[static_cast<std::size_t>(number) - 1].instance;
}

constexpr const char* kExample1Canonical =
    "5\n"
    "0 7 0 5 0\n"
    "3 0 7 0 3\n"
    "inf 3 0 6 4\n"
    "6 inf 5 0 8\n"
    "inf 4 2 4 0\n"
    "s 12\n";

TEST(ParseMatrixTest, SingleArc) {
  const FlowInstance instance = parse_matrix("2  0 5  1 0  s 5");
  EXPECT_EQ(instance.node_count(), 2);
  EXPECT_EQ(instance.supply(), 5);
  ASSERT_EQ(instance.arcs().size(), 1u);
  EXPECT_EQ(instance.arcs()[0], (Arc{1, 2, 5, 1}));
}

TEST(ParseMatrixTest, SupplyDefaultsToMaxFeasibleFlow) {
  const FlowInstance instance = parse_matrix("2 0 5 1 0");
  EXPECT_EQ(instance.supply(), 5);

  // Two disjoint unit paths through a diamond.
  const FlowInstance diamond =
      parse_matrix("4  0 1 1 0  2 0 0 1  3 inf 0 1  inf 4 5 0");
  EXPECT_EQ(diamond.supply(), 2);
}

TEST(ParseMatrixTest, CostUnderZeroCapacityIsDeadData) {
  const FlowInstance instance = parse_matrix("2 0 0 7 0 s 0");
  EXPECT_TRUE(instance.arcs().empty());
}

TEST(ParseMatrixTest, WhitespaceIsFree) {
  const FlowInstance compact = parse_matrix("2 0 5 1 0 s 5");
  const FlowInstance spread = parse_matrix("\n\t2\n 0\t5\n 1 0\n\ns  5\n\n");
  EXPECT_EQ(compact, spread);
}

TEST(ParseMatrixTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_THROW(parse_matrix("1 0"), ParseError);
  EXPECT_THROW(parse_matrix("x"), ParseError);
  EXPECT_THROW(parse_matrix("2 0 5 1"), ParseError);           // short
  EXPECT_THROW(parse_matrix("2 0 5 1 0 0"), ParseError);       // long
  EXPECT_THROW(parse_matrix("2 0 5 1 0 s"), ParseError);       // bare s
  EXPECT_THROW(parse_matrix("2 0 5 1 0 s -2"), ParseError);    // negative s
  EXPECT_THROW(parse_matrix("2 0 -5 1 0"), ParseError);        // negative cap
  EXPECT_THROW(parse_matrix("2 0 5 -1 0"), ParseError);        // negative cost
  EXPECT_THROW(parse_matrix("2 1 5 1 0"), ParseError);         // diagonal
  EXPECT_THROW(parse_matrix("2 0 5 inf 0"), ParseError);       // cap sans cost
  EXPECT_THROW(parse_matrix("2 0 inf 1 0"), ParseError);       // inf capacity
}

TEST(WriteMatrixTest, CanonicalExample1) {
  EXPECT_EQ(write_matrix(example(1)), kExample1Canonical);
}

TEST(WriteMatrixTest, EmptyNetwork) {
  EXPECT_EQ(write_matrix(FlowInstance(2, {}, 0)), "2\n0 0\ninf 0\ns 0\n");
}

TEST(MatrixFormTest, RoundTripsThroughTheStruct) {
  const MatrixForm form = MatrixForm::from_instance(example(2));
  EXPECT_EQ(form.node_count, 4);
  EXPECT_EQ(form.supply, 4);
  EXPECT_EQ(form.to_instance(), example(2));
}

TEST(RoundTripTest, MatrixFormOnAllFixtures) {
  for (const ReferenceFixture& fixture : reference_fixtures()) {
    EXPECT_EQ(parse_matrix(write_matrix(fixture.instance)), fixture.instance)
        << fixture.name;
  }
}

TEST(RoundTripTest, CanonicalMatrixTextIsAFixedPoint) {
  for (const ReferenceFixture& fixture : reference_fixtures()) {
    const std::string once = write_matrix(fixture.instance);
    EXPECT_EQ(write_matrix(parse_matrix(once)), once) << fixture.name;
  }
}

TEST(RoundTripTest, LargeFixturesUseEveryCandidatePair) {
  // The embedded matrices are complete: every pair above the diagonal has
  // positive capacity, so each must come back as an arc.
  for (std::size_t i = 3; i < reference_fixtures().size(); ++i) {
    const ReferenceFixture& fixture = reference_fixtures()[i];
    const std::size_t n =
        static_cast<std::size_t>(fixture.instance.node_count());
    EXPECT_EQ(fixture.instance.arcs().size(), n * (n - 1) / 2)
        << fixture.name;
  }
}

TEST(ParseDimacsTest, Example2) {
  const std::string text =
      "c proposed in the benchmark set\n"
      "p min 4 5\n"
      "n 1 4\n"
      "n 4 -4\n"
      "a 1 2 0 4 2\n"
      "a 1 3 0 2 2\n"
      "a 2 3 0 2 1\n"
      "a 2 4 0 3 3\n"
      "a 3 4 0 5 1\n";
  EXPECT_EQ(parse_dimacs(text), example(2));
}

TEST(ParseDimacsTest, NodeLinesInEitherOrder) {
  const std::string text =
      "p min 2 1\n"
      "n 2 -3\n"
      "n 1 3\n"
      "a 1 2 0 5 1\n";
  EXPECT_EQ(parse_dimacs(text).supply(), 3);
}

TEST(ParseDimacsTest, RelabelsABackwardChain) {
  // The path runs 1 -> 3 -> 2, so node 3 must become node 2.
  const std::string text =
      "p min 3 2\n"
      "n 1 5\n"
      "n 2 -5\n"
      "a 1 3 0 5 1\n"
      "a 3 2 0 5 1\n";
  const FlowInstance instance = parse_dimacs(text);
  ASSERT_EQ(instance.arcs().size(), 2u);
  EXPECT_EQ(instance.arcs()[0], (Arc{1, 2, 5, 1}));
  EXPECT_EQ(instance.arcs()[1], (Arc{2, 3, 5, 1}));
}

TEST(ParseDimacsTest, RelabelingIsStableByOriginalId) {
  // 2 and 3 are both ready right after the source; 2 keeps the lower
  // label. 4 is the sink and must come last despite its early readiness.
  const std::string text =
      "p min 5 4\n"
      "n 1 1\n"
      "n 4 -1\n"
      "a 1 3 0 1 1\n"
      "a 1 2 0 1 1\n"
      "a 3 5 0 1 1\n"
      "a 5 4 0 1 1\n";
  const FlowInstance instance = parse_dimacs(text);
  const Arc* relabeled = instance.find_arc(1, 2);
  ASSERT_NE(relabeled, nullptr);
  // Original 3 -> label 3 (after 2), original 5 -> label 4, sink 4 -> 5.
  EXPECT_NE(instance.find_arc(3, 4), nullptr);
  EXPECT_NE(instance.find_arc(4, 5), nullptr);
}

TEST(ParseDimacsTest, RejectsCycles) {
  const std::string text =
      "p min 2 2\n"
      "n 1 1\n"
      "n 2 -1\n"
      "a 1 2 0 1 1\n"
      "a 2 1 0 1 1\n";
  EXPECT_THROW(parse_dimacs(text), ParseError);
  try {
    parse_dimacs(text);
  } catch (const ParseError& error) {
    EXPECT_NE(std::string(error.what()).find("cycle"), std::string::npos);
  }
}

TEST(ParseDimacsTest, RejectsMalformedFiles) {
  EXPECT_THROW(parse_dimacs(""), ParseError);
  EXPECT_THROW(parse_dimacs("a 1 2 0 1 1\n"), ParseError);  // before header
  EXPECT_THROW(parse_dimacs("p max 2 1\nn 1 1\nn 2 -1\na 1 2 0 1 1\n"),
               ParseError);
  EXPECT_THROW(parse_dimacs("p min 2 0\nn 1 1\nn 2 -1\na 1 2 0 1 1\n"),
               ParseError);  // arc count mismatch
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 1\na 1 2 0 1 1\n"),
               ParseError);  // one node line
  EXPECT_THROW(
      parse_dimacs("p min 3 1\nn 1 1\nn 2 1\nn 3 -2\na 1 3 0 2 1\n"),
      ParseError);  // two sources
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 2\nn 2 -1\na 1 2 0 2 1\n"),
               ParseError);  // flux mismatch
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 1\nn 2 -1\na 1 2 1 2 1\n"),
               ParseError);  // nonzero lower bound
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 1\nn 2 -1\na 1 1 0 2 1\n"),
               ParseError);  // self-loop
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 1\nn 3 -1\na 1 2 0 2 1\n"),
               ParseError);  // id out of range
  EXPECT_THROW(parse_dimacs("p min 2 1\nn 1 1\nn 2 -1\nq\n"), ParseError);
}

TEST(WriteDimacsTest, Example2ContainsTheExpectedLines) {
  const std::string text = write_dimacs(example(2));
  EXPECT_NE(text.find("p min 4 5\n"), std::string::npos);
  EXPECT_NE(text.find("n 1 4\n"), std::string::npos);
  EXPECT_NE(text.find("n 4 -4\n"), std::string::npos);
  EXPECT_NE(text.find("a 3 4 0 5 1\n"), std::string::npos);
}

TEST(WriteDimacsTest, EmptyNetworkHeader) {
  const std::string text = write_dimacs(FlowInstance(2, {}, 0));
  EXPECT_EQ(text.rfind("p min 2 0\n", 0), 0u);
  EXPECT_EQ(parse_dimacs(text), FlowInstance(2, {}, 0));
}

TEST(RoundTripTest, DimacsOnAllFixtures) {
  for (const ReferenceFixture& fixture : reference_fixtures()) {
    EXPECT_EQ(parse_dimacs(write_dimacs(fixture.instance)), fixture.instance)
        << fixture.name;
  }
}

TEST(WriteTraceTest, Example1) {
  const std::string csv = write_trace(run_heuristic(example(1)));
  EXPECT_EQ(csv,
            "step,sender,receiver,quantity,unit_cost,leg_cost,"
            "cumulative_cost\n"
            "1,1,2,7,3,21,21\n"
            "2,1,4,5,6,30,51\n"
            "3,2,5,3,4,12,63\n"
            "4,2,3,4,3,12,75\n"
            "5,3,5,4,2,8,83\n"
            "6,4,5,5,4,20,103\n");
}

TEST(WriteTraceTest, Example2Cumulatives) {
  const std::string csv = write_trace(run_heuristic(example(2)));
  EXPECT_NE(csv.find(",4\n"), std::string::npos);
  EXPECT_NE(csv.find(",8\n"), std::string::npos);
  EXPECT_NE(csv.find(",10\n"), std::string::npos);
  EXPECT_NE(csv.find(",14\n"), std::string::npos);
}

TEST(WriteTraceTest, EmptyTraceIsHeaderOnly) {
  FlowSolution solution;
  EXPECT_EQ(write_trace(solution),
            "step,sender,receiver,quantity,unit_cost,leg_cost,"
            "cumulative_cost\n");
}

}  // namespace
}  // namespace sumflow
