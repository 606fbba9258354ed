// Copyright 2026 The vtrigid Authors.
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

#include "vtrigid/cliques.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"

namespace vtrigid {
namespace {

using Sets = std::vector<std::vector<int>>;

TEST(CliquesTest, CompleteGraphNeighborhoodIsOneClique) {
  EXPECT_EQ(MaximalNeighborhoodCliques(CompleteGraph(5), 0), (Sets{{1, 2, 3, 4}}));
}

TEST(CliquesTest, BipartiteNeighborhoodIsSingletons) {
  EXPECT_EQ(MaximalNeighborhoodCliques(CompleteBipartiteGraph(3, 3), 0),
            (Sets{{3}, {4}, {5}}));
}

TEST(CliquesTest, CycleNeighborhood) {
  EXPECT_EQ(MaximalNeighborhoodCliques(CycleGraph(5), 0), (Sets{{1}, {4}}));
}

TEST(CliquesTest, IntersectionConditionExamples) {
  EXPECT_TRUE(CliqueIntersectionCondition(CompleteBipartiteGraph(6, 6), 2));
  EXPECT_TRUE(CliqueIntersectionCondition(CompleteGraph(5), 2));
  EXPECT_FALSE(CliqueIntersectionCondition(WheelGraph(5), 2));
}

TEST(CliquesTest, IntersectionConditionLoosensWithDimension) {
  // In the wheel, rim cliques share only the hub, which is allowed for d=3.
  EXPECT_TRUE(CliqueIntersectionCondition(WheelGraph(5), 3));
}

TEST(CliquesTest, IntersectionConditionRejectsSmallDimension) {
  EXPECT_THROW(CliqueIntersectionCondition(CompleteGraph(3), 1), InputError);
}

TEST(CliquesTest, CliqueLimitIsResourceError) {
  // The complement of a perfect matching on 2m vertices has 2^m maximal
  // cliques; each neighborhood still has 2^(m-1).
  const int m = 10;
  std::vector<Edge> edges;
  for (int u = 0; u < 2 * m; ++u) {
    for (int v = u + 1; v < 2 * m; ++v) {
      if (v != u + m) edges.emplace_back(u, v);
    }
  }
  const Graph g(2 * m, edges);
  EXPECT_EQ(MaximalNeighborhoodCliques(g, 0).size(), size_t{1} << (m - 1));
  EXPECT_THROW(MaximalNeighborhoodCliques(g, 0, 100), ResourceError);
}

TEST(CliquesTest, NeighborhoodIsClique) {
  EXPECT_TRUE(NeighborhoodIsClique(CompleteGraph(4), 2));
  EXPECT_FALSE(NeighborhoodIsClique(CycleGraph(5), 0));
  EXPECT_TRUE(NeighborhoodIsClique(PathGraph(3), 0));
}

TEST(CliquesPropertyTest, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomGraph(3 + trial % 10, 0.5, rng);
    for (int v = 0; v < g.num_vertices(); ++v) {
      EXPECT_EQ(MaximalNeighborhoodCliques(g, v),
                testing::BruteForceNeighborhoodCliques(g, v));
    }
  }
}

// A graph whose every neighborhood is a clique is a disjoint union of
// complete graphs.
TEST(CliquesPropertyTest, CliqueNeighborhoodsForceCompleteComponents) {
  std::mt19937_64 rng(12);
  int hits = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Graph g = testing::RandomGraph(2 + trial % 7, 0.3 + 0.1 * (trial % 5), rng);
    bool all_cliques = true;
    for (int v = 0; v < g.num_vertices(); ++v) {
      all_cliques = all_cliques && NeighborhoodIsClique(g, v);
    }
    if (all_cliques) {
      ++hits;
      EXPECT_TRUE(ComponentsAreComplete(g));
    }
  }
  EXPECT_GT(hits, 10);
}

}  // namespace
}  // namespace vtrigid
