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

#include "vtrigid/pi_subgraph.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "vtrigid/cliques.h"
#include "vtrigid/errors.h"
#include "vtrigid/seeds.h"

namespace vtrigid {

Ordering::Ordering(std::vector<int> sequence)
    : sequence_(std::move(sequence)), position_(sequence_.size(), -1) {
  for (int i = 0; i < size(); ++i) {
    const int v = sequence_[i];
    if (v < 0 || v >= size() || position_[v] >= 0) {
      throw InputError("ordering is not a permutation of 0..n-1");
    }
    position_[v] = i;
  }
}

Ordering Ordering::Identity(int n) {
  std::vector<int> sequence(n);
  std::iota(sequence.begin(), sequence.end(), 0);
  return Ordering(std::move(sequence));
}

namespace {

void CheckOrdering(const Graph& graph, const Ordering& ordering) {
  if (ordering.size() != graph.num_vertices()) {
    throw InputError("ordering has " + std::to_string(ordering.size()) +
                     " vertices, graph has " +
                     std::to_string(graph.num_vertices()));
  }
}

// Uniform k-subset of `pool` (sorted output).
std::vector<int> RandomSubset(std::vector<int> pool, int k, std::mt19937_64& rng) {
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<int> pick(i, static_cast<int>(pool.size()) - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<Edge> NonAdjacentPairs(const Graph& graph, const std::vector<int>& vertices) {
  std::vector<Edge> pairs;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (!graph.HasEdge(vertices[i], vertices[j])) {
        pairs.emplace_back(vertices[i], vertices[j]);
      }
    }
  }
  return pairs;
}

}  // namespace

std::vector<int> OrderedParents(const Graph& graph, const Ordering& ordering, int v) {
  CheckOrdering(graph, ordering);
  graph.CheckVertex(v);
  std::vector<int> parents;
  for (int w : graph.Neighbors(v)) {
    if (ordering.position(w) < ordering.position(v)) parents.push_back(w);
  }
  return parents;
}

PiSubgraph BuildPiSubgraph(const Graph& graph, const Ordering& ordering,
                           int dimension, const ChoicePolicy& policy) {
  if (dimension < 2) throw InputError("pi-subgraphs need d >= 2");
  CheckOrdering(graph, ordering);
  const bool random = policy.kind == ChoicePolicy::Kind::kSeededRandom;
  std::mt19937_64 rng(policy.seed);

  PiSubgraph result;
  result.ordering = ordering;
  std::vector<Edge> edges;
  for (int v : ordering.sequence()) {
    AttachStep step;
    step.vertex = v;
    const std::vector<int> parents = OrderedParents(graph, ordering, v);
    step.ordered_degree = static_cast<int>(parents.size());
    if (step.ordered_degree <= dimension) {
      step.attach_case = AttachCase::kAllParents;
      step.chosen = parents;
    } else {
      const std::vector<Edge> open = NonAdjacentPairs(graph, parents);
      if (open.empty()) {
        step.attach_case = AttachCase::kCliqueParents;
        step.chosen = random ? RandomSubset(parents, dimension, rng)
                             : std::vector<int>(parents.begin(),
                                                parents.begin() + dimension);
      } else {
        step.attach_case = AttachCase::kNonCliqueParents;
        Edge pair = open.front();
        if (random) {
          std::uniform_int_distribution<size_t> pick(0, open.size() - 1);
          pair = open[pick(rng)];
        }
        std::vector<int> rest;
        for (int w : parents) {
          if (w != pair.first && w != pair.second) rest.push_back(w);
        }
        step.chosen = random ? RandomSubset(rest, dimension - 1, rng)
                             : std::vector<int>(rest.begin(),
                                                rest.begin() + (dimension - 1));
        step.chosen.push_back(pair.first);
        step.chosen.push_back(pair.second);
        std::sort(step.chosen.begin(), step.chosen.end());
        if (graph.HasEdge(pair.first, pair.second)) {
          throw InternalError("case 3 entered without a non-adjacent parent pair");
        }
        step.non_adjacent_pair = pair;
      }
    }
    for (int w : step.chosen) edges.emplace_back(v, w);
    result.steps.push_back(std::move(step));
  }
  result.graph = Graph(graph.num_vertices(), std::move(edges));
  return result;
}

void ValidatePiSubgraph(const Graph& graph, const PiSubgraph& pi_subgraph,
                        int dimension) {
  const Ordering& ordering = pi_subgraph.ordering;
  if (ordering.size() != graph.num_vertices() ||
      pi_subgraph.steps.size() != static_cast<size_t>(graph.num_vertices())) {
    throw ValidationError("shape", "ordering or step count does not match the graph");
  }
  std::vector<Edge> expected_edges;
  for (int i = 0; i < ordering.size(); ++i) {
    const AttachStep& step = pi_subgraph.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (vertex " +
                              std::to_string(step.vertex) + ")";
    if (step.vertex != ordering.sequence()[i]) {
      throw ValidationError("order", where + " is out of ordering order");
    }
    std::vector<int> parents;
    for (int w : graph.Neighbors(step.vertex)) {
      if (ordering.position(w) < i) parents.push_back(w);
    }
    if (step.ordered_degree != static_cast<int>(parents.size())) {
      throw ValidationError("ordered-degree", where);
    }
    std::vector<int> chosen = step.chosen;
    std::sort(chosen.begin(), chosen.end());
    if (std::adjacent_find(chosen.begin(), chosen.end()) != chosen.end() ||
        !std::includes(parents.begin(), parents.end(), chosen.begin(), chosen.end())) {
      throw ValidationError("chosen-subset", where + " chose a non-parent or a repeat");
    }
    const bool parents_clique = IsClique(graph, parents);
    const int deg = static_cast<int>(parents.size());
    switch (step.attach_case) {
      case AttachCase::kAllParents:
        if (deg > dimension || chosen != parents) {
          throw ValidationError("case-1", where);
        }
        break;
      case AttachCase::kCliqueParents:
        if (deg <= dimension || !parents_clique ||
            static_cast<int>(chosen.size()) != dimension) {
          throw ValidationError("case-2", where);
        }
        break;
      case AttachCase::kNonCliqueParents: {
        if (deg <= dimension || parents_clique ||
            static_cast<int>(chosen.size()) != dimension + 1) {
          throw ValidationError("case-3", where);
        }
        const auto& pair = step.non_adjacent_pair;
        if (!pair || graph.HasEdge(pair->first, pair->second) ||
            !std::binary_search(chosen.begin(), chosen.end(), pair->first) ||
            !std::binary_search(chosen.begin(), chosen.end(), pair->second)) {
          throw ValidationError("case-3-pair",
                                where + " lacks a certified non-adjacent chosen pair");
        }
        break;
      }
    }
    for (int w : chosen) expected_edges.emplace_back(step.vertex, w);
  }
  if (Graph(graph.num_vertices(), std::move(expected_edges)) != pi_subgraph.graph) {
    throw ValidationError("edges", "edge set differs from the union of choices");
  }
}

int EdgeCountProfile(const PiSubgraph& pi_subgraph, int dimension) {
  int total = 0;
  for (const AttachStep& step : pi_subgraph.steps) {
    switch (step.attach_case) {
      case AttachCase::kAllParents:
        total += step.ordered_degree;
        break;
      case AttachCase::kCliqueParents:
        total += dimension;
        break;
      case AttachCase::kNonCliqueParents:
        total += dimension + 1;
        break;
    }
  }
  if (total != pi_subgraph.graph.num_edges()) {
    throw ValidationError("provenance",
                          "case profile predicts " + std::to_string(total) +
                              " edges, graph has " +
                              std::to_string(pi_subgraph.graph.num_edges()));
  }
  return total;
}

PiSubgraph SamplePiSubgraph(const Graph& graph, int dimension, uint64_t seed,
                            int index) {
  std::mt19937_64 rng(DeriveSeed(seed, kPiSampleStream, index));
  std::vector<int> sequence(graph.num_vertices());
  std::iota(sequence.begin(), sequence.end(), 0);
  std::shuffle(sequence.begin(), sequence.end(), rng);
  return BuildPiSubgraph(graph, Ordering(std::move(sequence)), dimension,
                         ChoicePolicy::SeededRandom(rng()));
}

std::vector<PiSubgraph> SamplePiSubgraphs(const Graph& graph, int dimension,
                                          int count, uint64_t seed) {
  if (count < 1) throw InputError("sample count must be >= 1");
  std::vector<PiSubgraph> samples;
  samples.reserve(count);
  for (int i = 0; i < count; ++i) {
    samples.push_back(SamplePiSubgraph(graph, dimension, seed, i));
  }
  return samples;
}

DependenceHypotheses CheckDependenceHypotheses(const Graph& graph, int dimension,
                                               int64_t clique_limit) {
  if (dimension < 2) throw InputError("dependence hypotheses need d >= 2");
  DependenceHypotheses h;
  h.min_degree = true;
  h.no_clique_neighborhood = true;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (graph.Degree(v) < dimension * (dimension + 1)) h.min_degree = false;
    if (NeighborhoodIsClique(graph, v)) h.no_clique_neighborhood = false;
  }
  h.clique_intersection = CliqueIntersectionCondition(graph, dimension, clique_limit);
  return h;
}

DependenceProbe FindDependentPiSubgraph(const Graph& graph, int dimension,
                                        int budget, uint64_t seed,
                                        const RankOptions& rank_options,
                                        int64_t clique_limit) {
  if (budget < 1) throw InputError("probe budget must be >= 1");
  DependenceProbe probe;
  probe.hypotheses = CheckDependenceHypotheses(graph, dimension, clique_limit);
  for (int i = 0; i < budget; ++i) {
    PiSubgraph sample = SamplePiSubgraph(graph, dimension, seed, i);
    ++probe.samples_tried;
    RankOptions options = rank_options;
    options.seed = DeriveSeed(seed, kProbeStream, i);
    const auto& edges = sample.graph.edges();
    const int rank = GenericRank(edges, sample.graph, dimension, options);
    if (rank < static_cast<int>(edges.size())) {
      probe.witness_rank = rank;
      probe.witness_index = i;
      probe.witness = std::move(sample);
      break;
    }
  }
  return probe;
}

}  // namespace vtrigid
