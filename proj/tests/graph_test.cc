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

#include "vtrigid/graph.h"

#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"

namespace vtrigid {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(GraphTest, NeighborsOfCompleteGraph) {
  const Graph k4 = CompleteGraph(4);
  EXPECT_THAT(k4.Neighbors(0), ElementsAre(1, 2, 3));
}

TEST(GraphTest, NeighborsOfCycle) {
  const Graph c5 = CycleGraph(5);
  EXPECT_THAT(c5.Neighbors(0), ElementsAre(1, 4));
}

TEST(GraphTest, NeighborsOfCompleteBipartite) {
  const Graph k33 = CompleteBipartiteGraph(3, 3);
  EXPECT_THAT(k33.Neighbors(0), ElementsAre(3, 4, 5));
}

TEST(GraphTest, NeighborsOutOfRangeIsInputError) {
  const Graph c5 = CycleGraph(5);
  EXPECT_THROW(c5.Neighbors(5), InputError);
  EXPECT_THROW(c5.Neighbors(-1), InputError);
}

TEST(GraphTest, IsCliqueExamples) {
  const Graph k4 = CompleteGraph(4);
  const Graph c5 = CycleGraph(5);
  const std::vector<int> all = {0, 1, 2, 3};
  const std::vector<int> path = {0, 1, 2};
  const std::vector<int> edge = {0, 1};
  const std::vector<int> single = {3};
  const std::vector<int> none;
  EXPECT_TRUE(IsClique(k4, all));
  EXPECT_FALSE(IsClique(c5, path));
  EXPECT_TRUE(IsClique(c5, edge));
  EXPECT_TRUE(IsClique(c5, single));
  EXPECT_TRUE(IsClique(c5, none));
}

TEST(GraphTest, RejectsSelfLoopsAndOutOfRange) {
  EXPECT_THROW(Graph(3, {Edge(1, 1)}), InputError);
  EXPECT_THROW(Graph(3, {Edge(0, 3)}), InputError);
  EXPECT_THROW(Graph(-1, {}), InputError);
}

TEST(GraphTest, MergesDuplicateEdges) {
  const Graph g(3, {Edge(0, 1), Edge(1, 0), Edge(1, 2)});
  EXPECT_EQ(g.num_edges(), 2);
}

TEST(GraphTest, EdgeEditing) {
  const Graph c4 = CycleGraph(4);
  const Graph minus = c4.WithoutEdge(Edge(0, 1));
  EXPECT_EQ(minus.num_edges(), 3);
  EXPECT_FALSE(minus.HasEdge(0, 1));
  const std::vector<Edge> diag = {Edge(0, 2)};
  EXPECT_TRUE(c4.WithEdges(diag).HasEdge(2, 0));
  EXPECT_THROW(c4.WithoutEdge(Edge(0, 2)), InputError);
}

TEST(GraphTest, InducedSubgraph) {
  const Graph k5 = CompleteGraph(5);
  const std::vector<int> keep = {4, 1, 2};
  const Graph sub = k5.InducedSubgraph(keep);
  EXPECT_EQ(sub, CompleteGraph(3));
}

TEST(GraphTest, RegularDegree) {
  EXPECT_EQ(CycleGraph(7).RegularDegree(), 2);
  EXPECT_EQ(PathGraph(3).RegularDegree(), std::nullopt);
  EXPECT_TRUE(CompleteGraph(6).IsComplete());
  EXPECT_FALSE(CycleGraph(4).IsComplete());
}

TEST(GraphTest, Components) {
  const Graph g(5, {Edge(0, 1), Edge(3, 4)});
  EXPECT_EQ(NumConnectedComponents(g), 3);
  EXPECT_FALSE(IsConnected(g));
  EXPECT_TRUE(IsConnected(PetersenGraph()));
}

TEST(GraphTest, EdgeListRoundTrip) {
  const Graph petersen = PetersenGraph();
  std::stringstream buffer;
  WriteEdgeList(buffer, petersen);
  EXPECT_EQ(ReadEdgeList(buffer), petersen);
}

TEST(GraphTest, EdgeListAcceptsComments) {
  std::istringstream in("# header\n3 2\n0 1 # first\n\n1 2\n");
  const Graph g = ReadEdgeList(in);
  EXPECT_EQ(g, PathGraph(3));
}

struct BadEdgeList {
  std::string text;
  std::string message;
};

class EdgeListErrorTest : public ::testing::TestWithParam<BadEdgeList> {};

TEST_P(EdgeListErrorTest, ReportsInputError) {
  std::istringstream in(GetParam().text);
  try {
    ReadEdgeList(in);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_THAT(e.what(), HasSubstr(GetParam().message));
  }
}

INSTANTIATE_TEST_SUITE_P(
    Malformed, EdgeListErrorTest,
    ::testing::Values(BadEdgeList{"", "header"},
                      BadEdgeList{"3 x\n", "line 1"},
                      BadEdgeList{"3 1\n0 0\n", "line 2"},
                      BadEdgeList{"3 1\n0 7\n", "line 2"},
                      BadEdgeList{"3 2\n0 1\n1 0\n", "line 3"},
                      BadEdgeList{"3 2\n0 1\n", "expected 2"},
                      BadEdgeList{"3 1\n0 1 2\n", "line 2"}));

TEST(GraphPropertyTest, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = testing::RandomGraph(1 + trial % 12, 0.4, rng);
    int sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
      sum += g.Degree(v);
      for (int w : g.Neighbors(v)) EXPECT_TRUE(g.HasEdge(w, v));
    }
    EXPECT_EQ(sum, 2 * g.num_edges());
  }
}

}  // namespace
}  // namespace vtrigid
