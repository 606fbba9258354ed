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

#ifndef VTRIGID_CONSTRUCTIONS_H_
#define VTRIGID_CONSTRUCTIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "vtrigid/automorphisms.h"
#include "vtrigid/graph.h"
#include "vtrigid/rank_engine.h"

namespace vtrigid {

Graph CompleteGraph(int n);
Graph PathGraph(int n);
Graph CycleGraph(int n);
// Vertex i adjacent to i +- c (mod n) for every c in `connections`, each in
// 1..floor(n/2).
Graph CirculantGraph(int n, const std::vector<int>& connections);
// Parts {0..a-1} and {a..a+b-1}.
Graph CompleteBipartiteGraph(int a, int b);
Graph PetersenGraph();
// Hub 0 joined to the cycle 1..rim.
Graph WheelGraph(int rim);

enum class FamilyKind {
  kComplete,
  kCycle,
  kCirculant,
  kCompleteBipartite,
  kLexicographicProduct,
  kTightCounterexample,
  kCliqueMatching,
};

// A graph family member with its parameters.
//
// Text form: the kind followed by key=value tokens, e.g.
//   complete n=7
//   cycle n=6
//   circulant n=13 s=1,2,3
//   complete-bipartite a=6 b=6
//   lexicographic-product g=cycle/n=5 h=complete/n=3
//   tight-counterexample d=3
//   clique-matching s=3 k=2 matching=0-2,1-4,3-5
// Factors of a lexicographic product use '/' between their tokens.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kComplete;
  int n = 0;
  std::vector<int> connections;
  int a = 0;
  int b = 0;
  int d = 0;
  int s = 0;
  int k = 0;
  std::vector<Edge> matching;
  std::vector<FamilySpec> factors;  // outer, inner

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Throws InputError on unknown kinds, missing or malformed parameters, and
// out-of-range values.
FamilySpec ParseFamilySpec(const std::string& text);
FamilySpec ParseFamilySpec(const std::vector<std::string>& tokens);
std::string FormatFamilySpec(const FamilySpec& spec);

// s vertex-disjoint copies of K_k (copy i is {i*k, ..., i*k+k-1}) and the
// loose edges E_0 outside them.
struct CliqueProvenance {
  int clique_size = 0;
  std::vector<std::vector<int>> copies;
  std::vector<Edge> loose;
};

struct ConstructedGraph {
  Graph graph;
  FamilySpec spec;
  std::optional<CliqueProvenance> cliques;
  // For tight-counterexample: "printed" when the edge rule
  // {(i,j),(j+1,i)}, 1 <= i <= k, i <= j <= k, read mod (s,k), validated;
  // "fallback" when the explicit one-edge-per-pair-of-copies matching was
  // needed instead.
  std::string matching_rule;
};

// The two perfect matchings on s copies of K_k, k = s-1 (vertex (i,j) is
// i*k + j). The printed rule pairs (i,j) with (j+1,i) for 1 <= i <= k and
// i <= j <= k, coordinates mod (s,k). The copy-pair rule joins (a,b-1) to
// (b,a) for every a < b.
std::vector<Edge> PrintedRuleMatching(int s, int k);
std::vector<Edge> CopyPairMatching(int s, int k);

// tight-counterexample(d): s = d(d+1) copies of K_k, k = s-1, on Z_s x Z_k
// with (i,j) -> i*k + j, joined by a perfect matching. The result has passed
// VerifyCounterexampleStructure; a ValidationError names the failed check
// otherwise.
ConstructedGraph Construct(const FamilySpec& spec,
                           const AutomorphismOptions& automorphisms = {});

struct StructureReport {
  bool cliques_ok = false;       // (a) disjoint spanning copies of K_k, E_0 consistent
  bool regular_ok = false;       // (b) k-regular with k = d(d+1)-1
  bool matching_ok = false;      // (c) each vertex on exactly one E_0 edge
  bool transitive_ok = false;    // (d) vertex-transitive
  bool connected_ok = false;     // (e) connected
  std::vector<std::string> failures;  // "(a) ..." etc.

  bool ok() const { return failures.empty(); }
};

StructureReport VerifyCounterexampleStructure(
    const Graph& graph, const CliqueProvenance& cliques, int dimension,
    const AutomorphismOptions& automorphisms = {});

struct TightnessReport {
  int dimension = 0;
  int clique_size = 0;  // k
  int num_copies = 0;   // s
  int loose_edges = 0;  // |E_0|
  Edge removed_edge;
  // ks/2 - 1 + s(dk - d(d+1)/2), valid when |E_0| = ks/2.
  std::optional<int64_t> formula_bound;
  // The same bound evaluated on the actual partition (E_0 - e, E^1..E^s).
  int64_t partition_bound = 0;
  int64_t full_rank = 0;  // d*k*s - d(d+1)/2
  int rank_without_edge = 0;
  // s >= d(d+1): the inequality chain alone proves bound < full_rank.
  bool chain_guaranteed = false;
  bool regular = false;
  bool vertex_transitive = false;
  bool spanning_cliques = false;
  bool not_rigid_minus_edge = false;
  bool not_globally_rigid = false;
  StructureReport structure;
};

// Removes the least E_0 edge, bounds rank(E - e) by the clique partition,
// measures it, and concludes non-global-rigidity through the failure of
// redundant rigidity. Throws PropertyViolation if the measured rank exceeds
// the bound, or if the chain is guaranteed yet the bound reaches full rank.
TightnessReport VerifyTightness(const Graph& graph, const CliqueProvenance& cliques,
                                int dimension, const RankOptions& options = {},
                                const AutomorphismOptions& automorphisms = {});

}  // namespace vtrigid

#endif  // VTRIGID_CONSTRUCTIONS_H_
