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

#include "vtrigid/global_rigidity.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracles.h"
#include "vtrigid/connectivity.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"
#include "vtrigid/products.h"

namespace vtrigid {
namespace {

Graph Counterexample(int d) {
  FamilySpec spec;
  spec.kind = FamilyKind::kTightCounterexample;
  spec.d = d;
  return Construct(spec).graph;
}

// Re-derives a verdict's witness without trusting the verdict.
void ExpectWitnessHolds(const Graph& g, int d, const GlobalRigidityVerdict& v) {
  std::mt19937_64 rng(99);
  const int64_t full = FullRigidityRank(g.num_vertices(), d);
  switch (v.status) {
    case GlobalStatus::kCertifiedNotGloballyRigid:
      if (v.reason == "connectivity") {
        EXPECT_LT(v.connectivity, d + 1);
        EXPECT_EQ(VertexConnectivity(g), v.connectivity);
        if (!v.separator.empty()) EXPECT_TRUE(Disconnects(g, v.separator));
        if (v.missing_pair) {
          EXPECT_FALSE(g.HasEdge(v.missing_pair->first, v.missing_pair->second));
        }
      } else if (v.reason == "redundant-rigidity") {
        ASSERT_TRUE(v.critical_edge.has_value());
        if (g.num_vertices() <= 12) {
          EXPECT_LT(testing::RationalRigidityRank(g.WithoutEdge(*v.critical_edge), d, rng),
                    full);
        } else {
          const Graph rest = g.WithoutEdge(*v.critical_edge);
          EXPECT_LT(GenericRank(rest.edges(), rest, d, {.trials = 5, .seed = 1234}), full);
        }
      } else if (v.reason == "not-rigid") {
        EXPECT_LT(v.rank, full);
      }
      break;
    case GlobalStatus::kCertifiedGloballyRigid:
      if (v.reason == "stress-certificate") {
        EXPECT_EQ(v.stress_rank, g.num_vertices() - d - 1);
        EXPECT_TRUE(v.certificate_seed.has_value());
      } else {
        EXPECT_TRUE(g.IsComplete());
      }
      break;
    case GlobalStatus::kInconclusive:
      break;
  }
}

TEST(HendricksonTest, CompleteGraphPasses) {
  EXPECT_TRUE(HendricksonCheck(CompleteGraph(5), 2).passes);
}

TEST(HendricksonTest, PathFailsConnectivity) {
  const HendricksonResult result = HendricksonCheck(PathGraph(3), 2);
  EXPECT_FALSE(result.passes);
  EXPECT_EQ(result.failed_condition, "connectivity");
  EXPECT_EQ(result.cut.connectivity, 1);
}

TEST(HendricksonTest, CounterexampleFailsRedundantRigidity) {
  FamilySpec spec;
  spec.kind = FamilyKind::kTightCounterexample;
  spec.d = 2;
  const ConstructedGraph built = Construct(spec);
  const HendricksonResult result = HendricksonCheck(built.graph, 2);
  EXPECT_FALSE(result.passes);
  EXPECT_EQ(result.failed_condition, "redundant-rigidity");
  ASSERT_TRUE(result.redundancy.critical_edge.has_value());
  const auto& loose = built.cliques->loose;
  EXPECT_NE(std::find(loose.begin(), loose.end(), *result.redundancy.critical_edge),
            loose.end());
}

TEST(StressTest, StressMatrixShape) {
  const Graph k4 = CompleteGraph(4);
  std::vector<uint64_t> stress(k4.num_edges());
  for (size_t i = 0; i < stress.size(); ++i) stress[i] = gf::FromInt(int64_t(i) - 2);
  const ModMatrix omega = StressMatrix(k4, stress);
  for (int i = 0; i < 4; ++i) {
    uint64_t sum = 0;
    for (int j = 0; j < 4; ++j) {
      sum = gf::Add(sum, omega.at(i, j));
      EXPECT_EQ(omega.at(i, j), omega.at(j, i));
    }
    EXPECT_EQ(sum, 0u);
  }
}

TEST(StressTest, K4HasOneDimensionalCertificate) {
  const GlobalRigidityVerdict v = StressCertificate(CompleteGraph(4), 2, 1);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedGloballyRigid);
  EXPECT_EQ(v.stress_rank, 1);
  EXPECT_EQ(v.stress_target, 1);
}

TEST(StressTest, CycleIsInconclusive) {
  EXPECT_EQ(StressCertificate(CycleGraph(4), 2, 1).status, GlobalStatus::kInconclusive);
}

TEST(StressTest, CirculantCertifies) {
  const Graph c13 = CirculantGraph(13, {1, 2, 3});
  const GlobalRigidityVerdict v = DecideGlobalRigidity(c13, 2);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedGloballyRigid);
  EXPECT_EQ(v.stress_rank, 10);
  ExpectWitnessHolds(c13, 2, v);
}

TEST(VerdictTest, CompleteGraphInThreeSpace) {
  const GlobalRigidityVerdict v = DecideGlobalRigidity(CompleteGraph(6), 3);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedGloballyRigid);
  const GlobalRigidityVerdict cert = StressCertificate(CompleteGraph(6), 3, 3);
  EXPECT_EQ(cert.status, GlobalStatus::kCertifiedGloballyRigid);
  EXPECT_EQ(cert.stress_rank, 2);
}

TEST(VerdictTest, BowtieHasCutVertex) {
  const Graph bowtie(5, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4),
                         Edge(3, 4)});
  const GlobalRigidityVerdict v = DecideGlobalRigidity(bowtie, 2);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedNotGloballyRigid);
  EXPECT_EQ(v.connectivity, 1);
  EXPECT_EQ(v.separator, (std::vector<int>{2}));
}

TEST(VerdictTest, CounterexampleIsCertifiedNot) {
  const Graph g = Counterexample(2);
  const GlobalRigidityVerdict v = DecideGlobalRigidity(g, 2);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedNotGloballyRigid);
  EXPECT_EQ(v.reason, "redundant-rigidity");
  ExpectWitnessHolds(g, 2, v);
}

TEST(VerdictTest, SmallGraphs) {
  EXPECT_EQ(DecideGlobalRigidity(CompleteGraph(3), 2).status,
            GlobalStatus::kCertifiedGloballyRigid);
  const GlobalRigidityVerdict v = DecideGlobalRigidity(PathGraph(3), 2);
  EXPECT_EQ(v.status, GlobalStatus::kCertifiedNotGloballyRigid);
  ExpectWitnessHolds(PathGraph(3), 2, v);
}

TEST(VerdictTest, LineUsesTwoConnectivity) {
  EXPECT_EQ(DecideGlobalRigidity(CycleGraph(6), 1).status,
            GlobalStatus::kCertifiedGloballyRigid);
  EXPECT_EQ(DecideGlobalRigidity(PathGraph(4), 1).status,
            GlobalStatus::kCertifiedNotGloballyRigid);
}

TEST(VerdictTest, Deterministic) {
  const Graph g = CirculantGraph(11, {1, 3});
  const auto a = DecideGlobalRigidity(g, 2, {.seed = 5});
  const auto b = DecideGlobalRigidity(g, 2, {.seed = 5});
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.seeds_tried, b.seeds_tried);
}

TEST(MainTheoremTest, CirculantSatisfiesHypotheses) {
  const MainTheoremReport r = MainTheoremProbe(CirculantGraph(13, {1, 2, 3}), 2);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.degree, 6);
  EXPECT_EQ(r.verdict.status, GlobalStatus::kCertifiedGloballyRigid);
  EXPECT_FALSE(r.needs_attention);
  EXPECT_TRUE(r.watkins_holds);
}

TEST(MainTheoremTest, CounterexampleMissesDegreeThreshold) {
  const MainTheoremReport r = MainTheoremProbe(Counterexample(2), 2);
  EXPECT_FALSE(r.hypotheses_hold);
  EXPECT_EQ(r.degree, 5);
  EXPECT_EQ(r.degree_threshold, 6);
  EXPECT_EQ(r.verdict.status, GlobalStatus::kCertifiedNotGloballyRigid);
}

TEST(MainTheoremTest, CompleteGraph) {
  const MainTheoremReport r = MainTheoremProbe(CompleteGraph(7), 2);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.verdict.status, GlobalStatus::kCertifiedGloballyRigid);
}

TEST(GlobalPropertyTest, WitnessesHoldOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + trial % 2;
    const Graph g = testing::RandomGraph(4 + trial % 6, 0.7, rng);
    const GlobalRigidityVerdict v = DecideGlobalRigidity(g, d, {.seed = uint64_t(trial)});
    ExpectWitnessHolds(g, d, v);
    if (v.status == GlobalStatus::kCertifiedGloballyRigid) {
      EXPECT_TRUE(HendricksonCheck(g, d).passes);
    }
  }
}

TEST(GlobalPropertyTest, TransitiveGraphsAboveThresholdCertify) {
  for (int n = 3; n <= 6; ++n) {
    const Graph g = LexicographicProduct(CycleGraph(n), CompleteGraph(3));
    const MainTheoremReport r = MainTheoremProbe(g, 2);
    ASSERT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.verdict.status, GlobalStatus::kCertifiedGloballyRigid) << n;
  }
}

TEST(GlobalPropertyTest, StressRankNeverExceedsTarget) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 80; ++trial) {
    const int d = 2 + trial % 2;
    const Graph g = testing::RandomGraph(5 + trial % 6, 0.8, rng);
    const GlobalRigidityVerdict v = StressCertificate(g, d, trial);
    if (v.stress_rank >= 0) EXPECT_LE(v.stress_rank, g.num_vertices() - d - 1);
  }
}

TEST(GlobalPropertyTest, TransitiveGraphsAboveThresholdCertifyInSpace) {
  for (const Graph& g : {LexicographicProduct(CycleGraph(5), CompleteGraph(5)),
                         CirculantGraph(25, {1, 2, 3, 4, 5, 6}), CompleteGraph(13)}) {
    const MainTheoremReport r = MainTheoremProbe(g, 3);
    ASSERT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.verdict.status, GlobalStatus::kCertifiedGloballyRigid);
    EXPECT_TRUE(r.watkins_holds);
  }
}

}  // namespace
}  // namespace vtrigid
