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

#ifndef VTRIGID_RANK_ENGINE_H_
#define VTRIGID_RANK_ENGINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vtrigid/graph.h"
#include "vtrigid/modular_matrix.h"

namespace vtrigid {

// Coordinates in GF(p)^d for vertices 0..n-1. Random coordinates over the
// large prime field stand in for a generic point of R^d.
struct Realization {
  int dimension = 0;
  int num_vertices = 0;
  std::vector<uint64_t> coords;  // vertex-major, d entries per vertex

  uint64_t at(int v, int i) const { return coords[size_t(v) * dimension + i]; }
};

// Uniform coordinates from a std::mt19937_64 seeded with `seed`.
Realization RandomRealization(const Graph& graph, int dimension, uint64_t seed);

// Jacobian of the squared-length map with the constant factor 2 dropped: the
// row of {u,v} holds p_u - p_v in u's column block, p_v - p_u in v's, and
// zeros elsewhere. Columns d*v .. d*v+d-1 belong to vertex v.
struct RigidityMatrix {
  std::vector<Edge> edges;
  ModMatrix matrix;
};

// Rows in the given order. Throws InputError if the realization does not
// cover every endpoint.
RigidityMatrix BuildRigidityMatrix(std::span<const Edge> edges,
                                   const Realization& realization);
RigidityMatrix BuildRigidityMatrix(const Graph& graph,
                                   const Realization& realization);

// Rank of a rigid framework on n vertices: d*n - d(d+1)/2 when n >= d+1,
// otherwise n(n-1)/2.
int64_t FullRigidityRank(int num_vertices, int dimension);
// min(|E|, FullRigidityRank).
int64_t MaxwellCap(int num_vertices, int64_t num_edges, int dimension);

struct RankOptions {
  int trials = 3;
  uint64_t seed = 0;
};

// Max over `trials` random realizations of the exact GF(p) rank of the rows
// indexed by `subset`. Each trial can only underestimate the generic rank; a
// trial falls short with probability at most about rows*cols/p. `subset` may
// contain any pairs of distinct vertices of the graph, edges or not.
int GenericRank(std::span<const Edge> subset, const Graph& graph, int dimension,
                const RankOptions& options = {});

bool IsIndependent(std::span<const Edge> subset, const Graph& graph,
                   int dimension, const RankOptions& options = {});

// Rigid iff rank(E) equals FullRigidityRank. For n <= d+1 this is the
// same as being complete.
bool IsRigid(const Graph& graph, int dimension, const RankOptions& options = {});

struct RankReport {
  int num_vertices = 0;
  int num_edges = 0;
  int dimension = 0;
  int rank = 0;
  int64_t cap = 0;
  int trials = 0;
  uint64_t seed = 0;
  bool independent = false;
  bool rigid = false;

  friend bool operator==(const RankReport&, const RankReport&) = default;
};

RankReport AnalyzeRank(const Graph& graph, int dimension,
                       const RankOptions& options = {});

struct RedundancyReport {
  bool rigid = false;
  bool redundantly_rigid = false;
  int rank = 0;
  int64_t full_rank = 0;
  // When rigid but not redundantly rigid: an edge whose removal leaves a
  // non-rigid graph, and the measured rank of E minus that edge.
  std::optional<Edge> critical_edge;
  int rank_without_edge = 0;
};

// Redundant rigidity. At the realization attaining the largest rank, the left
// null space of the rigidity matrix (the equilibrium stresses) is computed;
// an edge carrying a non-zero stress is dependent on the others at that point,
// so removing it keeps the rank. Edges that no stress touches are candidate
// bridges of the matroid and are confirmed by a direct rank query on E - e.
RedundancyReport AnalyzeRedundantRigidity(const Graph& graph, int dimension,
                                          const RankOptions& options = {});
bool IsRedundantlyRigid(const Graph& graph, int dimension,
                        const RankOptions& options = {});

// E_0 ("loose" edges) plus parts E_1..E_s, whose union must be E(G).
struct CliquePartition {
  std::vector<Edge> loose;
  std::vector<std::vector<Edge>> parts;
};

// |E_0| + sum_i (d*|V(E_i)| - d(d+1)/2). Throws InputError if the partition
// does not cover exactly E(G) or a part spans fewer than d+1 vertices.
int64_t PartitionRankBound(const CliquePartition& partition, const Graph& graph,
                           int dimension);

struct BoundCheck {
  int rank = 0;
  int64_t bound = 0;
};

// Measures rank(E) and the partition bound. Throws PropertyViolation if the
// rank exceeds the bound.
BoundCheck VerifyBoundDominatesRank(const CliquePartition& partition,
                                    const Graph& graph, int dimension,
                                    const RankOptions& options = {});

}  // namespace vtrigid

#endif  // VTRIGID_RANK_ENGINE_H_
