// Copyright 2026 The spaths Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "spaths/ksp.h"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace spaths {
namespace {

using ::spaths::testing::G2;
using ::spaths::testing::G3;
using ::spaths::testing::K1;

TEST(KShortestPathsTest, G2FirstThree) {
  const auto paths = KShortestPaths(G2().graph, 1, 3);
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0], (WeightedPath{1, {1, 3}}));
  EXPECT_EQ(paths[1], (WeightedPath{2, {1, 2}}));
  EXPECT_EQ(paths[2], (WeightedPath{2, {1, 3, 4}}));
}

TEST(KShortestPathsTest, G3WalksWithSameEdgeMultiset) {
  // u0 u1 u2 u1 u3 u1 u4 and u0 u1 u3 u1 u2 u1 u4.
  const std::vector<Vertex> first = {1, 2, 3, 2, 4, 2, 5};
  const std::vector<Vertex> second = {1, 2, 4, 2, 3, 2, 5};
  const auto paths = KShortestPaths(G3().graph, 1, 7, {.target = 5});
  ASSERT_EQ(paths.size(), 7u);
  auto contains = [&](const std::vector<Vertex>& walk) {
    return std::any_of(paths.begin(), paths.end(),
                       [&](const WeightedPath& p) { return p.vertices == walk; });
  };
  EXPECT_TRUE(contains(first));
  EXPECT_TRUE(contains(second));
  for (const auto& p : paths) {
    EXPECT_EQ(p.vertices.back(), 5);
    if (p.vertices == first || p.vertices == second) EXPECT_EQ(p.weight, 6);
  }
  // 1 walk of weight 2, 2 of weight 4, 4 of weight 6.
  EXPECT_EQ(paths[0].weight, 2);
  EXPECT_EQ(paths[2].weight, 4);
  EXPECT_EQ(paths[3].weight, 6);
}

TEST(KShortestPathsTest, ExhaustedFrontierReturnsPartialList) {
  const auto paths = KShortestPaths(K1().graph, 1, 5);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0], (WeightedPath{7, {1, 2}}));
}

TEST(KShortestPathsTest, IsolatedSourceEmitsNothing) {
  EXPECT_TRUE(KShortestPaths(K1().graph, 2, 3).empty());
}

TEST(KShortestPathsTest, UnreachableTargetTerminatesDespiteCycles) {
  // 1 <-> 2 cycle, vertex 3 unreachable.
  Graph g(3);
  g.AddEdge(1, 2, 1);
  g.AddEdge(2, 1, 1);
  EXPECT_TRUE(KShortestPaths(g, 1, 4, {.target = 3}).empty());
}

TEST(KShortestPathsTest, TargetEqualToSourceGivesClosedWalks) {
  Graph g(2);
  g.AddEdge(1, 2, 1);
  g.AddEdge(2, 1, 2);
  const auto paths = KShortestPaths(g, 1, 2, {.target = 1});
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0], (WeightedPath{3, {1, 2, 1}}));
  EXPECT_EQ(paths[1], (WeightedPath{6, {1, 2, 1, 2, 1}}));
}

TEST(KShortestPathsTest, TargetFilterOnG2) {
  const auto paths = KShortestPaths(G2().graph, 1, 5, {.target = 4});
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(paths[0], (WeightedPath{2, {1, 3, 4}}));
  EXPECT_EQ(paths[1], (WeightedPath{4, {1, 2, 3, 4}}));
}

TEST(KShortestPathsTest, RejectsBadArguments) {
  EXPECT_THROW(KShortestPaths(K1().graph, 1, 0), std::invalid_argument);
  EXPECT_THROW(KShortestPaths(K1().graph, 3, 1), std::invalid_argument);
  EXPECT_THROW(KShortestPaths(K1().graph, 1, 1, {.target = 9}),
               std::invalid_argument);
}

TEST(KShortestPathsTest, PopLimitStopsZeroWeightCycleInTargetMode) {
  // 1 <-> 2 at weight 0 yields infinitely many walks lighter than 1 -> 3.
  Graph g(3);
  g.AddEdge(1, 2, 0);
  g.AddEdge(2, 1, 0);
  g.AddEdge(1, 3, 5);
  EXPECT_THROW(KShortestPaths(g, 1, 1, {.target = 3, .max_pops = 1000}),
               KspLimitExceeded);
  // Without a target the same graph is harmless.
  EXPECT_EQ(KShortestPaths(g, 1, 3, {.max_pops = 1000}).size(), 3u);
  EXPECT_THROW(KShortestPaths(g, 1, 1, {.max_pops = 0}), std::invalid_argument);
}

TEST(KShortestPathsTest, PopLimitNotHitReturnsFullResult) {
  const auto paths = KShortestPaths(G2().graph, 1, 5, {.target = 4, .max_pops = 50});
  EXPECT_EQ(paths.size(), 2u);
}

TEST(KShortestPathsTest, LongCycleIsBoundedByK) {
  Graph g(3);
  g.AddEdge(1, 2, 0);
  g.AddEdge(2, 3, 0);
  g.AddEdge(3, 1, 0);
  const auto paths = KShortestPaths(g, 1, 5);
  ASSERT_EQ(paths.size(), 5u);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    EXPECT_EQ(paths[i].num_edges(), i + 1);
    EXPECT_EQ(paths[i].weight, 0);
  }
}

}  // namespace
}  // namespace spaths
