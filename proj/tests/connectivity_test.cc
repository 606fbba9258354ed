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

#include "vtrigid/connectivity.h"

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"

namespace vtrigid {
namespace {

TEST(ConnectivityTest, CompleteGraphUsesConvention) {
  const VertexCut cut = MinimumVertexCut(CompleteGraph(5));
  EXPECT_EQ(cut.connectivity, 4);
  EXPECT_TRUE(cut.separator.empty());
}

TEST(ConnectivityTest, Cycle) {
  const VertexCut cut = MinimumVertexCut(CycleGraph(6));
  EXPECT_EQ(cut.connectivity, 2);
  EXPECT_TRUE(Disconnects(CycleGraph(6), cut.separator));
}

TEST(ConnectivityTest, CompleteBipartite) {
  EXPECT_EQ(VertexConnectivity(CompleteBipartiteGraph(6, 6)), 6);
}

TEST(ConnectivityTest, Petersen) { EXPECT_EQ(VertexConnectivity(PetersenGraph()), 3); }

TEST(ConnectivityTest, Disconnected) {
  const Graph g(4, {Edge(0, 1), Edge(2, 3)});
  const VertexCut cut = MinimumVertexCut(g);
  EXPECT_EQ(cut.connectivity, 0);
  EXPECT_TRUE(cut.separator.empty());
}

TEST(ConnectivityTest, TooFewVerticesIsInputError) {
  EXPECT_THROW(VertexConnectivity(Graph(1, {})), InputError);
}

TEST(ConnectivityTest, LocalConnectivity) {
  const Graph k33 = CompleteBipartiteGraph(3, 3);
  std::vector<int> separator;
  EXPECT_EQ(LocalVertexConnectivity(k33, 0, 1, -1, &separator), 3);
  EXPECT_EQ(separator.size(), 3u);
  EXPECT_TRUE(Disconnects(k33, separator));
}

TEST(ConnectivityPropertyTest, LocalSeparatorsDisconnect) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomGraph(4 + trial % 8, 0.5, rng);
    for (int t = 1; t < g.num_vertices(); ++t) {
      if (g.HasEdge(0, t)) continue;
      std::vector<int> separator;
      const int k = LocalVertexConnectivity(g, 0, t, -1, &separator);
      EXPECT_EQ(static_cast<int>(separator.size()), k);
      EXPECT_TRUE(Disconnects(g, separator) || (k == 0 && !IsConnected(g)));
    }
  }
}

TEST(ConnectivityPropertyTest, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomGraph(2 + trial % 9, 0.35 + 0.1 * (trial % 6), rng);
    const VertexCut cut = MinimumVertexCut(g);
    ASSERT_EQ(cut.connectivity, testing::BruteForceConnectivity(g));
    if (IsConnected(g) && !g.IsComplete()) {
      ASSERT_FALSE(cut.separator.empty());
      EXPECT_EQ(static_cast<int>(cut.separator.size()), cut.connectivity);
      EXPECT_TRUE(Disconnects(g, cut.separator));
    }
  }
}

// Deleting a vertex lowers connectivity by at most one.
TEST(ConnectivityPropertyTest, VertexDeletionLosesAtMostOne) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::RandomGraph(4 + trial % 8, 0.6, rng);
    const int kappa = VertexConnectivity(g);
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::vector<int> keep;
      for (int w = 0; w < g.num_vertices(); ++w) {
        if (w != v) keep.push_back(w);
      }
      EXPECT_GE(VertexConnectivity(g.InducedSubgraph(keep)), kappa - 1);
    }
  }
}

}  // namespace
}  // namespace vtrigid
