// Copyright 2026 The sumflow Authors
// Licensed under the Apache License, Version 2.0 (see LICENSE file)

#include "sumflow/generator.hpp"
#include "sumflow/io.hpp"

namespace sumflow {

namespace {

// The three small networks come as arc lists; the six larger ones as the
// matrix form (capacities above the diagonal, costs below). The larger
// ones carry no stated supply, so parsing calibrates it to the maximum
// feasible flow.

constexpr const char* kExample4Matrix = R"(5
0 3 15 15 8
5 0 13 3 7
5 1 0 14 12
5 4 1 0 15
2 3 5 5 0
)";

constexpr const char* kExample5Matrix = R"(8
0 11 12 5 11 10 3 2
4 0 8 15 6 9 4 12
1 5 0 4 8 11 14 15
5 4 4 0 9 3 3 4
4 2 4 1 0 13 4 13
4 1 2 1 1 0 4 14
5 4 2 5 1 3 0 6
2 4 4 1 3 3 4 0
)";

constexpr const char* kExample6Matrix = R"(10
0 15 1 12 13 14 2 6 4 13
1 0 7 14 3 4 3 3 14 9
2 4 0 9 3 13 10 6 8 7
3 2 5 0 2 4 2 3 4 7
3 3 5 2 0 1 14 15 8 8
4 4 2 3 1 0 6 14 6 2
1 3 4 5 1 3 0 12 6 4
3 1 2 1 4 2 3 0 7 2
1 4 2 4 4 4 3 1 0 2
2 5 1 5 3 5 1 3 1 0
)";

constexpr const char* kExample7Matrix = R"(15
0 10 8 12 11 14 14 6 11 3 1 12 8 8 14
5 0 10 10 13 13 9 3 4 14 1 8 3 15 11
5 3 0 8 8 1 11 1 2 8 2 13 13 11 3
1 2 2 0 10 8 15 10 13 7 7 13 2 2 3
5 1 1 1 0 6 13 13 1 6 8 7 10 10 5
4 4 4 3 3 0 7 1 15 3 2 6 3 8 6
2 4 1 4 1 2 0 15 14 1 12 5 7 9 15
4 4 1 5 4 3 3 0 7 15 5 11 10 9 11
3 2 3 3 5 4 4 2 0 10 3 2 15 3 1
5 3 2 5 5 3 4 3 2 0 9 14 11 3 6
2 3 2 5 1 2 1 2 3 2 0 7 15 3 13
5 3 1 5 5 3 1 2 3 3 2 0 10 6 3
4 4 2 1 2 2 3 3 1 2 5 1 0 7 8
5 4 3 3 2 3 5 3 3 2 3 4 4 0 2
2 2 5 1 5 5 4 1 2 2 4 1 4 1 0
)";

constexpr const char* kExample8Matrix = R"(20
0 13 12 6 4 12 15 5 11 7 13 12 3 13 15 8 14 9 3 3
3 0 7 12 13 12 5 9 2 2 3 11 8 3 8 3 1 13 9 14
2 2 0 11 9 13 14 15 1 13 10 15 8 8 13 4 8 14 9 13
3 2 2 0 12 9 4 10 2 10 10 11 14 15 12 9 14 9 1 2
4 2 5 5 0 13 8 13 4 9 10 1 10 6 1 8 3 2 4 3
4 2 3 1 5 0 3 1 10 5 9 11 8 9 7 2 8 13 14 5
5 5 2 3 1 3 0 4 9 10 7 4 15 2 2 3 3 10 9 1
2 1 1 3 1 3 3 0 14 11 12 1 13 15 15 13 12 8 3 6
4 4 4 1 1 2 3 4 0 3 1 15 5 5 5 8 10 1 13 9
3 5 4 5 3 2 1 4 4 0 13 6 7 1 3 10 5 14 2 15
3 1 2 1 2 3 3 3 5 3 0 9 11 15 5 7 7 12 13 2
5 4 5 2 4 2 4 4 1 2 2 0 3 6 1 8 6 3 4 14
4 5 2 4 4 1 4 2 5 1 3 3 0 11 8 14 2 12 12 9
3 4 2 4 3 1 1 4 3 1 2 4 1 0 3 9 5 3 4 14
4 2 5 2 4 1 2 1 3 4 3 3 4 4 0 2 4 1 7 1
4 4 5 2 4 2 1 4 3 3 4 4 2 4 3 0 14 3 2 5
5 5 2 4 3 3 5 2 2 1 5 4 3 4 3 4 0 7 2 15
3 4 3 5 2 1 1 1 3 3 2 4 4 4 5 5 1 0 5 5
1 4 1 3 3 5 3 2 4 4 3 2 1 3 2 1 4 2 0 1
3 4 2 4 2 4 4 3 1 2 3 2 1 5 3 5 2 4 2 0
)";

constexpr const char* kExample9Matrix = R"(25
0 7 1 12 3 3 10 4 5 7 7 6 10 3 3 2 5 12 4 12 11 13 13 5 5
2 0 8 5 13 13 9 4 11 4 7 6 9 15 12 15 4 8 1 12 10 13 15 14 7
3 5 0 1 9 4 4 5 2 12 12 9 6 13 9 15 14 6 9 6 10 12 12 2 13
1 1 2 0 1 7 11 12 6 12 14 4 2 4 6 5 14 1 9 3 13 3 8 15 6
5 2 2 1 0 1 4 6 6 4 15 11 15 7 15 1 10 13 4 14 12 13 9 12 5
2 2 1 3 1 0 4 5 9 13 5 7 13 10 15 4 13 11 4 8 6 9 13 2 13
4 1 3 4 2 3 0 13 6 7 9 11 12 12 6 7 15 9 13 5 10 9 15 2 8
3 1 3 4 2 5 5 0 8 2 14 14 7 12 3 10 4 7 13 3 5 8 6 12 15
5 3 2 4 2 5 4 4 0 3 4 11 6 15 15 10 13 7 10 15 9 15 11 8 10
1 1 2 5 5 4 4 2 3 0 14 3 6 15 7 10 14 15 10 2 1 10 9 15 12
5 3 5 1 2 3 1 4 3 3 0 10 8 4 15 9 1 11 8 1 14 5 4 2 5
5 5 4 2 3 4 1 1 2 3 5 0 4 10 1 5 5 14 7 12 10 12 2 15 13
4 2 2 5 5 4 2 1 5 3 5 1 0 1 7 5 10 4 9 10 9 7 1 8 7
3 2 5 1 3 2 5 4 2 2 1 4 3 0 2 7 7 9 13 11 14 1 4 7 15
1 1 3 5 3 1 1 5 3 2 4 2 3 4 0 12 7 6 1 12 8 3 7 3 12
5 2 4 5 1 3 3 2 2 4 5 1 4 1 5 0 6 15 1 13 10 9 10 11 2
5 3 4 3 5 2 1 3 5 1 3 4 1 5 4 3 0 14 1 5 3 14 2 9 10
1 3 3 5 5 5 4 3 5 3 2 2 4 3 4 5 5 0 10 13 1 13 8 11 4
3 5 1 1 2 3 3 5 3 3 3 4 1 5 1 3 2 2 0 9 11 15 7 2 1
4 1 2 1 1 2 5 3 3 1 5 3 5 4 2 5 4 3 5 0 10 12 11 6 15
5 3 2 3 5 4 2 4 5 3 3 2 1 1 1 3 1 5 4 1 0 8 15 2 4
1 2 3 1 1 4 2 4 3 3 1 1 1 3 2 5 5 5 3 2 2 0 12 14 12
3 4 2 3 4 5 1 4 3 3 5 2 1 4 4 2 5 5 5 1 2 1 0 5 3
4 1 3 5 3 2 2 3 5 1 3 5 1 4 5 2 1 4 5 4 5 1 4 0 13
2 3 1 5 4 4 5 1 5 3 4 4 5 1 3 4 5 5 5 3 3 5 1 5 0
)";

std::vector<ReferenceFixture> build_fixtures() {
  std::vector<ReferenceFixture> fixtures;

  fixtures.push_back(
      {"example1",
       FlowInstance(5,
                    {{1, 2, 7, 3},
                     {1, 4, 5, 6},
                     {2, 3, 7, 3},
                     {2, 5, 3, 4},
                     {3, 4, 6, 5},
                     {3, 5, 4, 2},
                     {4, 5, 8, 4}},
                    12),
       103});

  fixtures.push_back({"example2",
                      FlowInstance(4,
                                   {{1, 2, 4, 2},
                                    {1, 3, 2, 2},
                                    {2, 3, 2, 1},
                                    {2, 4, 3, 3},
                                    {3, 4, 5, 1}},
                                   4),
                      14});

  fixtures.push_back({"example3",
                      FlowInstance(5,
                                   {{1, 2, 15, 1},
                                    {1, 3, 5, 6},
                                    {1, 4, 30, 7},
                                    {1, 5, 40, 10},
                                    {2, 3, 10, 2},
                                    {2, 4, 15, 3},
                                    {2, 5, 15, 4},
                                    {3, 4, 7, 1},
                                    {3, 5, 10, 4},
                                    {4, 5, 20, 2}},
                                   20),
                      120});

  fixtures.push_back({"example4", parse_matrix(kExample4Matrix), 172});
  fixtures.push_back({"example5", parse_matrix(kExample5Matrix), 187});
  fixtures.push_back({"example6", parse_matrix(kExample6Matrix), 224});
  fixtures.push_back({"example7", parse_matrix(kExample7Matrix), 493});
  fixtures.push_back({"example8", parse_matrix(kExample8Matrix), 518});
  fixtures.push_back({"example9", parse_matrix(kExample9Matrix), 655});

  return fixtures;
}

}  // namespace

const std::vector<ReferenceFixture>& reference_fixtures() {
  static const std::vector<ReferenceFixture> fixtures = build_fixtures();
  return fixtures;
}

}  // namespace sumflow
