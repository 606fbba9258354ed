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

#include "vtrigid/reports.h"

#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"
#include "vtrigid/global_rigidity.h"
#include "vtrigid/pi_subgraph.h"
#include "vtrigid/rank_engine.h"

namespace vtrigid {
namespace {

using nlohmann::json;

TEST(ReportsTest, RankReportRoundTrip) {
  const RankReport report = AnalyzeRank(CompleteGraph(5), 2, {.trials = 2, .seed = 77});
  EXPECT_EQ(RankReportFromJson(ToJson(report)), report);
  EXPECT_EQ(ToJson(report)["rank"], 7);
}

TEST(ReportsTest, VerdictRoundTrip) {
  for (const Graph& g : {PathGraph(3), CirculantGraph(13, {1, 2, 3}), CycleGraph(5)}) {
    const GlobalRigidityVerdict v = DecideGlobalRigidity(g, 2);
    const GlobalRigidityVerdict back = GlobalRigidityVerdictFromJson(ToJson(v));
    EXPECT_EQ(ToJson(back), ToJson(v));
    EXPECT_EQ(back.status, v.status);
    EXPECT_EQ(back.critical_edge, v.critical_edge);
    EXPECT_EQ(back.certificate_seed, v.certificate_seed);
  }
}

TEST(ReportsTest, ProvenanceSidecarRoundTrip) {
  FamilySpec spec;
  spec.kind = FamilyKind::kTightCounterexample;
  spec.d = 2;
  const ConstructedGraph built = Construct(spec);
  const json doc = ToJson(built);
  EXPECT_EQ(doc["matching_rule"], "printed");
  const CliqueProvenance back = CliqueProvenanceFromJson(doc);
  EXPECT_EQ(back.copies, built.cliques->copies);
  EXPECT_EQ(back.loose, built.cliques->loose);
  EXPECT_EQ(back.clique_size, 5);
}

TEST(ReportsTest, MalformedJsonIsInputError) {
  EXPECT_THROW(RankReportFromJson(json::object()), InputError);
  EXPECT_THROW(PiSubgraphFromJson(json{{"ordering", {0, 0}}, {"steps", json::array()}}),
               InputError);
  EXPECT_THROW(CliqueProvenanceFromJson(json{{"clique_size", "x"}}), InputError);
}

TEST(ReportsTest, TextIsSortedFlatKeys) {
  const json doc = {{"zeta", 1}, {"alpha", {{"b", true}, {"a", "word"}}}, {"list", {1, 2}}};
  EXPECT_EQ(FormatText(doc), "alpha.a: word\nalpha.b: true\nlist: [1,2]\nzeta: 1\n");
}

TEST(ReportsTest, ProbeReportCarriesWitness) {
  const DependenceProbe probe = FindDependentPiSubgraph(CompleteBipartiteGraph(6, 6), 2, 500, 1);
  const json doc = ToJson(probe);
  EXPECT_EQ(doc["witness_found"], probe.witness.has_value());
  if (probe.witness) {
    EXPECT_EQ(PiSubgraphFromJson(doc["witness"]), *probe.witness);
  }
}

}  // namespace
}  // namespace vtrigid
