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

#ifndef VTRIGID_REPORTS_H_
#define VTRIGID_REPORTS_H_

#include <string>

#include "json.hpp"
#include "vtrigid/constructions.h"
#include "vtrigid/global_rigidity.h"
#include "vtrigid/pi_subgraph.h"
#include "vtrigid/rank_engine.h"

namespace vtrigid {

// Structured (JSON) forms of the result types. Edges serialize as [u, v];
// absent optionals serialize as null.
nlohmann::json ToJson(const RankReport& report);
RankReport RankReportFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const RedundancyReport& report);
nlohmann::json ToJson(const GlobalRigidityVerdict& verdict);
GlobalRigidityVerdict GlobalRigidityVerdictFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const MainTheoremReport& report);
nlohmann::json ToJson(const StructureReport& report);
nlohmann::json ToJson(const TightnessReport& report);
nlohmann::json ToJson(const DependenceHypotheses& hypotheses);
nlohmann::json ToJson(const DependenceProbe& probe);

// Provenance: {"ordering": [...], "steps": [{"vertex", "case", "ordered_degree",
// "chosen", "non_adjacent_pair"}]}. The graph is rebuilt from the choices.
nlohmann::json ToJson(const PiSubgraph& pi_subgraph);
PiSubgraph PiSubgraphFromJson(const nlohmann::json& j);

// Sidecar for constructed graphs: spec, matching rule, clique copies, E_0.
nlohmann::json ToJson(const ConstructedGraph& constructed);
CliqueProvenance CliqueProvenanceFromJson(const nlohmann::json& j);

// "key: value" lines with nested keys joined by '.', sorted by key.
std::string FormatText(const nlohmann::json& document);

}  // namespace vtrigid

#endif  // VTRIGID_REPORTS_H_
