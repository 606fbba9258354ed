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

#include "vtrigid/rank_engine.h"

#include <algorithm>
#include <random>
#include <string>

#include "vtrigid/errors.h"
#include "vtrigid/seeds.h"

namespace vtrigid {

Realization RandomRealization(const Graph& graph, int dimension, uint64_t seed) {
  if (dimension < 1) throw InputError("dimension must be >= 1");
  Realization rho;
  rho.dimension = dimension;
  rho.num_vertices = graph.num_vertices();
  rho.coords.resize(size_t(graph.num_vertices()) * dimension);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> uniform(0, gf::kPrime - 1);
  for (auto& x : rho.coords) x = uniform(rng);
  return rho;
}

RigidityMatrix BuildRigidityMatrix(std::span<const Edge> edges,
                                   const Realization& realization) {
  const int d = realization.dimension;
  if (d < 1) throw InputError("realization has no dimension");
  if (realization.coords.size() != size_t(realization.num_vertices) * d) {
    throw InputError("realization coordinate count does not match n*d");
  }
  RigidityMatrix rm;
  rm.edges.assign(edges.begin(), edges.end());
  rm.matrix = ModMatrix(static_cast<int>(edges.size()), d * realization.num_vertices);
  for (int r = 0; r < static_cast<int>(edges.size()); ++r) {
    const auto [u, v] = edges[r];
    if (u < 0 || v >= realization.num_vertices || u == v) {
      throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has no coordinates in the realization");
    }
    for (int i = 0; i < d; ++i) {
      const uint64_t diff = gf::Sub(realization.at(u, i), realization.at(v, i));
      rm.matrix.at(r, d * u + i) = diff;
      rm.matrix.at(r, d * v + i) = gf::Neg(diff);
    }
  }
  return rm;
}

RigidityMatrix BuildRigidityMatrix(const Graph& graph,
                                   const Realization& realization) {
  if (realization.num_vertices < graph.num_vertices()) {
    throw InputError("realization does not cover all vertices");
  }
  return BuildRigidityMatrix(graph.edges(), realization);
}

int64_t FullRigidityRank(int num_vertices, int dimension) {
  const int64_t n = num_vertices;
  const int64_t d = dimension;
  if (n >= d + 1) return d * n - d * (d + 1) / 2;
  return n * (n - 1) / 2;
}

int64_t MaxwellCap(int num_vertices, int64_t num_edges, int dimension) {
  return std::min(num_edges, FullRigidityRank(num_vertices, dimension));
}

namespace {

void CheckDimensionAndTrials(int dimension, const RankOptions& options) {
  if (dimension < 1) throw InputError("dimension must be >= 1");
  if (options.trials < 1) throw InputError("rank trials must be >= 1");
}

}  // namespace

int GenericRank(std::span<const Edge> subset, const Graph& graph, int dimension,
                const RankOptions& options) {
  CheckDimensionAndTrials(dimension, options);
  for (const Edge& e : subset) {
    if (e.first == e.second || e.first < 0 || e.second >= graph.num_vertices()) {
      throw InputError("edge subset contains a pair outside E(K_V)");
    }
  }
  const int64_t ceiling = MaxwellCap(graph.num_vertices(),
                                     static_cast<int64_t>(subset.size()), dimension);
  int best = 0;
  for (int t = 0; t < options.trials && best < ceiling; ++t) {
    const auto rho = RandomRealization(
        graph, dimension, DeriveSeed(options.seed, kRankTrialStream, t));
    best = std::max(best, Rank(BuildRigidityMatrix(subset, rho).matrix));
  }
  return best;
}

bool IsIndependent(std::span<const Edge> subset, const Graph& graph,
                   int dimension, const RankOptions& options) {
  return GenericRank(subset, graph, dimension, options) ==
         static_cast<int>(subset.size());
}

bool IsRigid(const Graph& graph, int dimension, const RankOptions& options) {
  if (graph.num_vertices() < 1) throw InputError("rigidity needs n >= 1");
  return GenericRank(graph.edges(), graph, dimension, options) ==
         FullRigidityRank(graph.num_vertices(), dimension);
}

RankReport AnalyzeRank(const Graph& graph, int dimension,
                       const RankOptions& options) {
  RankReport report;
  report.num_vertices = graph.num_vertices();
  report.num_edges = graph.num_edges();
  report.dimension = dimension;
  report.rank = GenericRank(graph.edges(), graph, dimension, options);
  report.cap = MaxwellCap(graph.num_vertices(), graph.num_edges(), dimension);
  report.trials = options.trials;
  report.seed = options.seed;
  report.independent = report.rank == graph.num_edges();
  report.rigid = report.rank == FullRigidityRank(graph.num_vertices(), dimension);
  return report;
}

RedundancyReport AnalyzeRedundantRigidity(const Graph& graph, int dimension,
                                          const RankOptions& options) {
  CheckDimensionAndTrials(dimension, options);
  RedundancyReport report;
  report.full_rank = FullRigidityRank(graph.num_vertices(), dimension);
  const int m = graph.num_edges();

  // Row-reduce R^T: its pivot columns are a basis of edges, and its null
  // space is the space of equilibrium stresses.
  std::optional<ReducedRowEchelon> best;
  for (int t = 0; t < options.trials; ++t) {
    const auto rho = RandomRealization(
        graph, dimension, DeriveSeed(options.seed, kRankTrialStream, t));
    auto rref = RowReduce(BuildRigidityMatrix(graph, rho).matrix.Transposed());
    if (!best || rref.rank() > best->rank()) best = std::move(rref);
    if (best->rank() == MaxwellCap(graph.num_vertices(), m, dimension)) break;
  }
  report.rank = best->rank();
  report.rigid = report.rank == report.full_rank;
  if (!report.rigid) return report;

  // An edge is stressed iff it is a free column, or its pivot row has a
  // non-zero entry in some free column.
  std::vector<char> is_pivot(m, 0);
  for (int c : best->pivot_columns) is_pivot[c] = 1;
  std::vector<Edge> unstressed;
  for (int i = 0; i < best->rank(); ++i) {
    bool stressed = false;
    for (int c = 0; c < m && !stressed; ++c) {
      stressed = !is_pivot[c] && best->matrix.at(i, c) != 0;
    }
    if (!stressed) unstressed.push_back(graph.edges()[best->pivot_columns[i]]);
  }
  std::sort(unstressed.begin(), unstressed.end());

  for (const Edge& e : unstressed) {
    const Graph rest = graph.WithoutEdge(e);
    const int rank = GenericRank(rest.edges(), rest, dimension, options);
    if (rank < report.full_rank) {
      report.critical_edge = e;
      report.rank_without_edge = rank;
      return report;
    }
  }
  report.redundantly_rigid = true;
  return report;
}

bool IsRedundantlyRigid(const Graph& graph, int dimension,
                        const RankOptions& options) {
  return AnalyzeRedundantRigidity(graph, dimension, options).redundantly_rigid;
}

int64_t PartitionRankBound(const CliquePartition& partition, const Graph& graph,
                           int dimension) {
  if (dimension < 1) throw InputError("dimension must be >= 1");
  std::vector<char> covered(graph.num_edges(), 0);
  auto mark = [&](const std::vector<Edge>& edges, const std::string& name) {
    for (const Edge& e : edges) {
      const auto index = graph.EdgeIndex(e);
      if (!index) {
        throw InputError(name + " contains {" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + "}, which is not an edge");
      }
      covered[*index] = 1;
    }
  };
  mark(partition.loose, "E_0");
  const int64_t d = dimension;
  std::vector<Edge> loose = partition.loose;
  std::sort(loose.begin(), loose.end());
  loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
  int64_t bound = static_cast<int64_t>(loose.size());
  for (size_t i = 0; i < partition.parts.size(); ++i) {
    const std::string name = "part E_" + std::to_string(i + 1);
    mark(partition.parts[i], name);
    const int64_t span =
        static_cast<int64_t>(EdgeSetVertices(partition.parts[i]).size());
    if (span < d + 1) {
      throw InputError(name + " spans " + std::to_string(span) +
                       " vertices, fewer than d+1 = " + std::to_string(d + 1));
    }
    bound += d * span - d * (d + 1) / 2;
  }
  for (int i = 0; i < graph.num_edges(); ++i) {
    if (!covered[i]) {
      const Edge& e = graph.edges()[i];
      throw InputError("partition does not cover edge {" +
                       std::to_string(e.first) + "," + std::to_string(e.second) +
                       "}");
    }
  }
  return bound;
}

BoundCheck VerifyBoundDominatesRank(const CliquePartition& partition,
                                    const Graph& graph, int dimension,
                                    const RankOptions& options) {
  BoundCheck check;
  check.bound = PartitionRankBound(partition, graph, dimension);
  check.rank = GenericRank(graph.edges(), graph, dimension, options);
  if (check.rank > check.bound) {
    throw PropertyViolation("rank " + std::to_string(check.rank) +
                            " exceeds partition bound " +
                            std::to_string(check.bound));
  }
  return check;
}

}  // namespace vtrigid
