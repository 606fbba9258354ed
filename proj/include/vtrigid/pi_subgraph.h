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

#ifndef VTRIGID_PI_SUBGRAPH_H_
#define VTRIGID_PI_SUBGRAPH_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "vtrigid/cliques.h"
#include "vtrigid/graph.h"
#include "vtrigid/rank_engine.h"

namespace vtrigid {

// A vertex ordering (v_1, ..., v_n).
class Ordering {
 public:
  Ordering() = default;
  // Throws InputError unless `sequence` is a permutation of 0..n-1.
  explicit Ordering(std::vector<int> sequence);

  static Ordering Identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int position(int v) const { return position_[v]; }

  friend bool operator==(const Ordering& a, const Ordering& b) {
    return a.sequence_ == b.sequence_;
  }

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

// Neighbors of v that precede it in the ordering, sorted by id.
std::vector<int> OrderedParents(const Graph& graph, const Ordering& ordering, int v);

// The three ways a vertex can be attached while building a pi-subgraph.
enum class AttachCase {
  kAllParents = 1,        // ordered degree <= d: join every parent
  kCliqueParents = 2,     // parents form a clique: join d of them
  kNonCliqueParents = 3,  // otherwise: join d+1, two of them non-adjacent
};

struct AttachStep {
  int vertex = 0;
  AttachCase attach_case = AttachCase::kAllParents;
  int ordered_degree = 0;
  std::vector<int> chosen;  // sorted
  // The non-adjacent chosen pair guaranteed in case 3.
  std::optional<Edge> non_adjacent_pair;

  friend bool operator==(const AttachStep&, const AttachStep&) = default;
};

struct PiSubgraph {
  Graph graph;
  Ordering ordering;
  std::vector<AttachStep> steps;  // in ordering order

  friend bool operator==(const PiSubgraph&, const PiSubgraph&) = default;
};

// How parents are picked when there is a choice. Lexicographic takes the
// smallest ids (and the least non-adjacent pair first in case 3); seeded
// random takes uniform subsets (and a uniform non-adjacent pair).
struct ChoicePolicy {
  enum class Kind { kLexicographic, kSeededRandom };
  Kind kind = Kind::kLexicographic;
  uint64_t seed = 0;

  static ChoicePolicy Lexicographic() { return {}; }
  static ChoicePolicy SeededRandom(uint64_t seed) {
    return {Kind::kSeededRandom, seed};
  }
};

// Processes v_1, ..., v_n in order; step i attaches v_i to parents among
// v_1..v_{i-1}. Requires d >= 2.
PiSubgraph BuildPiSubgraph(const Graph& graph, const Ordering& ordering,
                           int dimension, const ChoicePolicy& policy = {});

// Re-derives every step from `graph` and checks the recorded provenance
// against it. Throws ValidationError naming the first failed check.
void ValidatePiSubgraph(const Graph& graph, const PiSubgraph& pi_subgraph,
                        int dimension);

// Sum over steps of the edges each case contributes (ordered degree, d, or
// d+1). Throws ValidationError if it disagrees with the stored edge count.
int EdgeCountProfile(const PiSubgraph& pi_subgraph, int dimension);

// `count` pi-subgraphs from uniform orderings with seeded-random choices.
// Sample i depends only on (seed, i).
PiSubgraph SamplePiSubgraph(const Graph& graph, int dimension, uint64_t seed,
                            int index);
std::vector<PiSubgraph> SamplePiSubgraphs(const Graph& graph, int dimension,
                                          int count, uint64_t seed);

// Degree, non-clique neighborhood, and clique intersection conditions under
// which some ordering-induced subgraph must be dependent.
struct DependenceHypotheses {
  bool min_degree = false;           // deg(v) >= d(d+1) for all v
  bool no_clique_neighborhood = false;  // N(v) is not a clique for all v
  bool clique_intersection = false;  // overlaps of maximal cliques <= d-2
  bool all() const {
    return min_degree && no_clique_neighborhood && clique_intersection;
  }
};

DependenceHypotheses CheckDependenceHypotheses(
    const Graph& graph, int dimension, int64_t clique_limit = kDefaultCliqueLimit);

struct DependenceProbe {
  DependenceHypotheses hypotheses;
  int samples_tried = 0;
  std::optional<PiSubgraph> witness;
  int witness_rank = -1;
  std::optional<int> witness_index;
};

// Samples up to `budget` pi-subgraphs (the same samples SamplePiSubgraph
// produces for this seed) and returns the first one whose edge set is
// dependent in the rigidity matroid.
DependenceProbe FindDependentPiSubgraph(const Graph& graph, int dimension,
                                        int budget, uint64_t seed,
                                        const RankOptions& rank_options = {},
                                        int64_t clique_limit = kDefaultCliqueLimit);

}  // namespace vtrigid

#endif  // VTRIGID_PI_SUBGRAPH_H_
