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

#include "vtrigid/automorphisms.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"
#include "vtrigid/products.h"

namespace vtrigid {
namespace {

size_t GroupOrder(const AutomorphismGenerators& group) {
  // Closure by breadth-first multiplication; only for tiny groups.
  std::set<std::vector<int>> elements = {VertexPermutation::Identity(group.num_vertices).image()};
  std::vector<std::vector<int>> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& x : frontier) {
      for (const auto& g : group.generators) {
        std::vector<int> y(x.size());
        for (size_t i = 0; i < x.size(); ++i) y[i] = g(x[i]);
        if (elements.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return elements.size();
}

TEST(AutomorphismsTest, TriangleIsFullySymmetric) {
  const auto group = FindAutomorphismGenerators(CompleteGraph(3));
  EXPECT_EQ(VertexOrbit(group, 0), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(GroupOrder(group), 6u);
}

TEST(AutomorphismsTest, PathHasOneSwap) {
  const auto group = FindAutomorphismGenerators(PathGraph(3));
  EXPECT_EQ(GroupOrder(group), 2u);
  EXPECT_EQ(VertexOrbit(group, 0), (std::vector<int>{0, 2}));
  EXPECT_EQ(VertexOrbit(group, 1), (std::vector<int>{1}));
}

TEST(AutomorphismsTest, PetersenOrbit) {
  const auto group = FindAutomorphismGenerators(PetersenGraph());
  EXPECT_EQ(VertexOrbit(group, 0).size(), 10u);
  EXPECT_EQ(GroupOrder(group), 120u);
}

TEST(AutomorphismsTest, GeneratorsAreAutomorphisms) {
  const Graph petersen = PetersenGraph();
  for (const auto& g : FindAutomorphismGenerators(petersen).generators) {
    EXPECT_TRUE(IsAutomorphism(petersen, g));
  }
}

TEST(AutomorphismsTest, VertexTransitivityExamples) {
  EXPECT_TRUE(IsVertexTransitive(CompleteBipartiteGraph(3, 3)));
  EXPECT_FALSE(IsVertexTransitive(PathGraph(3)));
  EXPECT_TRUE(IsVertexTransitive(PetersenGraph()));
  EXPECT_TRUE(IsVertexTransitive(CirculantGraph(13, {1, 2, 3})));
  EXPECT_FALSE(IsVertexTransitive(WheelGraph(5)));
}

TEST(AutomorphismsTest, PairOrbitExamples) {
  EXPECT_EQ(PairOrbit(CompleteGraph(4), 0, 1).size(), 6u);
  const Graph c5 = CycleGraph(5);
  EXPECT_EQ(PairOrbit(c5, 0, 1), c5.edges());
  EXPECT_EQ(PairOrbit(PetersenGraph(), 0, 2).size() + PairOrbit(PetersenGraph(), 0, 1).size(),
            45u);
  const Graph petersen = PetersenGraph();
  int u = 0, v = 1;
  while (petersen.HasEdge(u, v)) ++v;
  EXPECT_EQ(PairOrbit(petersen, u, v).size(), 30u);
}

TEST(AutomorphismsTest, PairOrbitsPartitionAllPairs) {
  const auto group = FindAutomorphismGenerators(PetersenGraph());
  const auto orbits = PairOrbits(group);
  size_t total = 0;
  for (const auto& orbit : orbits) total += orbit.size();
  EXPECT_EQ(orbits.size(), 2u);
  EXPECT_EQ(total, 45u);
}

TEST(AutomorphismsTest, PermutationValidation) {
  EXPECT_THROW(VertexPermutation({0, 0, 1}), InputError);
  EXPECT_THROW(VertexPermutation({0, 3}), InputError);
  EXPECT_TRUE(VertexPermutation::Identity(4).IsIdentity());
}

TEST(AutomorphismsTest, BudgetExhaustionIsResourceError) {
  AutomorphismOptions tiny;
  tiny.node_budget = 2;
  EXPECT_THROW(FindAutomorphismGenerators(PetersenGraph(), tiny), ResourceError);
  AutomorphismOptions small;
  small.max_vertices = 5;
  EXPECT_THROW(FindAutomorphismGenerators(PetersenGraph(), small), ResourceError);
}

TEST(AutomorphismsPropertyTest, OrbitsMatchBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::RandomGraph(1 + trial % 8, 0.2 + 0.1 * (trial % 7), rng);
    const auto group = FindAutomorphismGenerators(g);
    ASSERT_EQ(VertexOrbits(group), testing::BruteForceVertexOrbits(g));
    for (const auto& generator : group.generators) {
      EXPECT_TRUE(IsAutomorphism(g, generator));
    }
    if (g.num_vertices() >= 2) {
      EXPECT_EQ(PairOrbit(group, 0, 1), testing::BruteForcePairOrbit(g, 0, 1));
    }
  }
}

TEST(AutomorphismsPropertyTest, VertexTransitiveImpliesRegular) {
  std::mt19937_64 rng(4);
  int transitive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomGraph(2 + trial % 7, 0.5, rng);
    if (IsVertexTransitive(g)) {
      ++transitive;
      EXPECT_TRUE(g.RegularDegree().has_value());
    }
  }
  EXPECT_GT(transitive, 5);
}

TEST(ProductsTest, CycleTimesEdge) {
  const Graph g = LexicographicProduct(CycleGraph(5), CompleteGraph(2));
  EXPECT_EQ(g.num_vertices(), 10);
  EXPECT_EQ(g.RegularDegree(), 5);
}

TEST(ProductsTest, TrivialInnerFactor) {
  const Graph petersen = PetersenGraph();
  EXPECT_EQ(LexicographicProduct(petersen, CompleteGraph(1)), petersen);
}

TEST(ProductsTest, EdgeTimesEdgeIsK4) {
  EXPECT_EQ(LexicographicProduct(CompleteGraph(2), CompleteGraph(2)), CompleteGraph(4));
}

TEST(ProductsTest, SizeLimitIsResourceError) {
  EXPECT_THROW(LexicographicProduct(CycleGraph(100), CompleteGraph(100), 5000),
               ResourceError);
}

TEST(ProductsPropertyTest, CycleTimesCompleteIsTransitiveWithExpectedDegree) {
  for (int n = 3; n <= 7; ++n) {
    for (int m = 1; m <= 4; ++m) {
      const Graph g = LexicographicProduct(CycleGraph(n), CompleteGraph(m));
      EXPECT_EQ(g.RegularDegree(), 2 * m + (m - 1)) << n << " " << m;
      EXPECT_TRUE(IsVertexTransitive(g)) << n << " " << m;
    }
  }
}

TEST(AutomorphismsPropertyTest, PairOrbitsAreEqualOrDisjoint) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::RandomGraph(3 + trial % 6, 0.5, rng);
    const auto group = FindAutomorphismGenerators(g);
    const int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const auto orbit = PairOrbit(group, u, v);
        for (const Edge& member : orbit) {
          EXPECT_EQ(PairOrbit(group, member.first, member.second), orbit);
        }
      }
    }
  }
}

}  // namespace
}  // namespace vtrigid
