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

#ifndef VTRIGID_GLOBAL_RIGIDITY_H_
#define VTRIGID_GLOBAL_RIGIDITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vtrigid/automorphisms.h"
#include "vtrigid/connectivity.h"
#include "vtrigid/graph.h"
#include "vtrigid/modular_matrix.h"
#include "vtrigid/rank_engine.h"

namespace vtrigid {

enum class GlobalStatus {
  kCertifiedGloballyRigid,
  kCertifiedNotGloballyRigid,
  kInconclusive,
};

const char* GlobalStatusName(GlobalStatus status);

// Why a verdict was reached. Witness fields are filled according to `reason`:
//   "complete"            small graph (n <= d+1) that is complete
//   "connectivity"        `separator` of size `connectivity` < d+1; small
//                         graphs also report a `missing_pair`
//   "redundant-rigidity"  G - `critical_edge` has rank `rank_without_edge`
//                         below `full_rank`
//   "two-connected"       d = 1 and G is 2-connected
//   "stress-certificate"  stress matrix of rank `stress_rank` = n-d-1 at
//                         `certificate_seed`
//   "not-rigid"           rigidity rank `rank` below `full_rank`
//   "certificate-failed"  every seed in `seeds_tried` fell short
struct GlobalRigidityVerdict {
  GlobalStatus status = GlobalStatus::kInconclusive;
  std::string reason;
  int connectivity = -1;
  std::vector<int> separator;
  std::optional<Edge> critical_edge;
  std::optional<Edge> missing_pair;
  int rank = -1;
  int rank_without_edge = -1;
  int64_t full_rank = -1;
  std::optional<uint64_t> certificate_seed;
  int stress_rank = -1;
  int stress_target = -1;
  std::vector<uint64_t> seeds_tried;
};

struct HendricksonResult {
  bool passes = false;
  // "", "connectivity" or "redundant-rigidity".
  std::string failed_condition;
  VertexCut cut;
  RedundancyReport redundancy;
  std::optional<Edge> missing_pair;
};

// (d+1)-connectivity, then redundant rigidity. For n <= d+1 the check passes
// iff G is complete.
HendricksonResult HendricksonCheck(const Graph& graph, int dimension,
                                   const RankOptions& options = {});

// n x n symmetric stress matrix: -w_uv off the diagonal on edges, row sums
// zero.
ModMatrix StressMatrix(const Graph& graph, const std::vector<uint64_t>& stress);

// One randomized sufficiency test. Samples a realization from `seed`, takes a
// random combination of a basis of its equilibrium stresses, and certifies
// global rigidity iff the stress matrix has rank n-d-1. Never certifies the
// negative: a short rank yields kInconclusive.
GlobalRigidityVerdict StressCertificate(const Graph& graph, int dimension,
                                        uint64_t seed);

struct GlobalRigidityOptions {
  RankOptions rank;
  int retries = 5;
  uint64_t seed = 0;
};

GlobalRigidityVerdict DecideGlobalRigidity(
    const Graph& graph, int dimension, const GlobalRigidityOptions& options = {});

struct MainTheoremReport {
  int dimension = 0;
  bool connected = false;
  bool vertex_transitive = false;
  std::optional<int> degree;  // set when regular
  int degree_threshold = 0;   // d(d+1)
  bool hypotheses_hold = false;
  int connectivity = -1;
  int watkins_bound = -1;  // ceil(2*degree/3), when connected and transitive
  bool watkins_holds = true;
  GlobalRigidityVerdict verdict;
  // Hypotheses hold but the one-sided certificate never succeeded.
  bool needs_attention = false;
};

// Checks the hypotheses of the degree-d(d+1) theorem for vertex-transitive
// graphs and runs the verdict. Throws PropertyViolation if the hypotheses
// hold and G is certified not globally rigid, or if the Watkins bound fails.
MainTheoremReport MainTheoremProbe(const Graph& graph, int dimension,
                                   const GlobalRigidityOptions& options = {},
                                   const AutomorphismOptions& automorphisms = {});

}  // namespace vtrigid

#endif  // VTRIGID_GLOBAL_RIGIDITY_H_
