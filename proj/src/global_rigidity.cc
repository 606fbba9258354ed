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

#include <random>

#include "vtrigid/errors.h"
#include "vtrigid/seeds.h"

namespace vtrigid {

const char* GlobalStatusName(GlobalStatus status) {
  switch (status) {
    case GlobalStatus::kCertifiedGloballyRigid:
      return "certified_globally_rigid";
    case GlobalStatus::kCertifiedNotGloballyRigid:
      return "certified_not_globally_rigid";
    case GlobalStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

namespace {

std::optional<Edge> FirstMissingPair(const Graph& graph) {
  for (int u = 0; u < graph.num_vertices(); ++u) {
    for (int v = u + 1; v < graph.num_vertices(); ++v) {
      if (!graph.HasEdge(u, v)) return Edge(u, v);
    }
  }
  return std::nullopt;
}

void CheckDimension(int dimension) {
  if (dimension < 1) throw InputError("dimension must be >= 1");
}

}  // namespace

HendricksonResult HendricksonCheck(const Graph& graph, int dimension,
                                   const RankOptions& options) {
  CheckDimension(dimension);
  HendricksonResult result;
  const int n = graph.num_vertices();
  if (n <= dimension + 1) {
    // Complete graphs pass; any other graph this small has kappa <= n-2 < d+1.
    result.missing_pair = FirstMissingPair(graph);
    result.passes = !result.missing_pair.has_value();
    if (result.passes) return result;
  }
  result.cut = MinimumVertexCut(graph);
  if (result.cut.connectivity < dimension + 1) {
    result.failed_condition = "connectivity";
    return result;
  }
  result.redundancy = AnalyzeRedundantRigidity(graph, dimension, options);
  if (!result.redundancy.redundantly_rigid) {
    result.failed_condition = "redundant-rigidity";
    return result;
  }
  result.passes = true;
  return result;
}

ModMatrix StressMatrix(const Graph& graph, const std::vector<uint64_t>& stress) {
  if (stress.size() != static_cast<size_t>(graph.num_edges())) {
    throw InputError("stress length does not match edge count");
  }
  ModMatrix omega(graph.num_vertices(), graph.num_vertices());
  for (int i = 0; i < graph.num_edges(); ++i) {
    const auto [u, v] = graph.edges()[i];
    omega.at(u, v) = gf::Neg(stress[i]);
    omega.at(v, u) = gf::Neg(stress[i]);
    omega.at(u, u) = gf::Add(omega.at(u, u), stress[i]);
    omega.at(v, v) = gf::Add(omega.at(v, v), stress[i]);
  }
  return omega;
}

GlobalRigidityVerdict StressCertificate(const Graph& graph, int dimension,
                                        uint64_t seed) {
  CheckDimension(dimension);
  GlobalRigidityVerdict verdict;
  verdict.seeds_tried = {seed};
  const int n = graph.num_vertices();
  const int m = graph.num_edges();
  verdict.full_rank = FullRigidityRank(n, dimension);
  verdict.stress_target = n - dimension - 1;
  if (n < dimension + 2) {
    verdict.reason = "too-small";
    return verdict;
  }

  const Realization rho = RandomRealization(graph, dimension, seed);
  const ReducedRowEchelon rref =
      RowReduce(BuildRigidityMatrix(graph, rho).matrix.Transposed());
  verdict.rank = rref.rank();
  if (verdict.rank < verdict.full_rank) {
    verdict.reason = "not-rigid";
    return verdict;
  }
  const auto stresses = NullSpace(rref);
  if (static_cast<int>(stresses.size()) != m - verdict.rank) {
    throw InternalError("stress space dimension " + std::to_string(stresses.size()) +
                        " differs from |E| - rank = " +
                        std::to_string(m - verdict.rank));
  }
  if (stresses.empty()) {
    verdict.reason = "certificate-failed";
    verdict.stress_rank = 0;
    return verdict;
  }

  std::mt19937_64 rng(MixSeed(seed));
  std::uniform_int_distribution<uint64_t> uniform(1, gf::kPrime - 1);
  std::vector<uint64_t> omega(m, 0);
  for (const auto& basis_vector : stresses) {
    const uint64_t c = uniform(rng);
    for (int i = 0; i < m; ++i) {
      omega[i] = gf::Add(omega[i], gf::Mul(c, basis_vector[i]));
    }
  }
  const ModMatrix stress_matrix = StressMatrix(graph, omega);

  // Equilibrium: every coordinate vector lies in the kernel of the stress
  // matrix.
  for (int u = 0; u < n; ++u) {
    for (int i = 0; i < dimension; ++i) {
      uint64_t sum = 0;
      for (int v = 0; v < n; ++v) {
        if (stress_matrix.at(u, v) != 0) {
          sum = gf::Add(sum, gf::Mul(stress_matrix.at(u, v), rho.at(v, i)));
        }
      }
      if (sum != 0) {
        throw PropertyViolation("computed stress is not in equilibrium at vertex " +
                                std::to_string(u));
      }
    }
  }

  verdict.stress_rank = Rank(stress_matrix);
  if (verdict.stress_rank > verdict.stress_target) {
    throw PropertyViolation("stress matrix rank " +
                            std::to_string(verdict.stress_rank) +
                            " exceeds n-d-1 = " +
                            std::to_string(verdict.stress_target));
  }
  if (verdict.stress_rank == verdict.stress_target) {
    verdict.status = GlobalStatus::kCertifiedGloballyRigid;
    verdict.reason = "stress-certificate";
    verdict.certificate_seed = seed;
  } else {
    verdict.reason = "certificate-failed";
  }
  return verdict;
}

GlobalRigidityVerdict DecideGlobalRigidity(const Graph& graph, int dimension,
                                           const GlobalRigidityOptions& options) {
  CheckDimension(dimension);
  if (graph.num_vertices() < 1) throw InputError("global rigidity needs n >= 1");
  const int n = graph.num_vertices();
  GlobalRigidityVerdict verdict;
  verdict.full_rank = FullRigidityRank(n, dimension);

  if (n <= dimension + 1 && graph.IsComplete()) {
    verdict.status = GlobalStatus::kCertifiedGloballyRigid;
    verdict.reason = "complete";
    return verdict;
  }

  if (dimension == 1) {
    // On the line, globally rigid iff 2-connected.
    const VertexCut cut = MinimumVertexCut(graph);
    verdict.connectivity = cut.connectivity;
    if (cut.connectivity >= 2) {
      verdict.status = GlobalStatus::kCertifiedGloballyRigid;
      verdict.reason = "two-connected";
    } else {
      verdict.status = GlobalStatus::kCertifiedNotGloballyRigid;
      verdict.reason = "connectivity";
      verdict.separator = cut.separator;
    }
    return verdict;
  }

  const HendricksonResult necessary = HendricksonCheck(graph, dimension, options.rank);
  verdict.connectivity = necessary.cut.connectivity;
  verdict.rank = necessary.redundancy.rank;
  if (!necessary.passes) {
    verdict.status = GlobalStatus::kCertifiedNotGloballyRigid;
    if (necessary.failed_condition == "connectivity") {
      verdict.reason = "connectivity";
      verdict.separator = necessary.cut.separator;
      verdict.missing_pair = necessary.missing_pair;
    } else if (!necessary.redundancy.rigid) {
      verdict.reason = "not-rigid";
    } else {
      verdict.reason = "redundant-rigidity";
      verdict.critical_edge = necessary.redundancy.critical_edge;
      verdict.rank_without_edge = necessary.redundancy.rank_without_edge;
    }
    return verdict;
  }

  verdict.reason = "certificate-failed";
  verdict.stress_target = n - dimension - 1;
  for (int attempt = 0; attempt < options.retries; ++attempt) {
    const uint64_t seed = DeriveSeed(options.seed, kCertificateStream, attempt);
    verdict.seeds_tried.push_back(seed);
    const GlobalRigidityVerdict certificate = StressCertificate(graph, dimension, seed);
    verdict.stress_rank = std::max(verdict.stress_rank, certificate.stress_rank);
    if (certificate.status == GlobalStatus::kCertifiedGloballyRigid) {
      verdict.status = GlobalStatus::kCertifiedGloballyRigid;
      verdict.reason = "stress-certificate";
      verdict.certificate_seed = seed;
      verdict.stress_rank = certificate.stress_rank;
      break;
    }
  }
  return verdict;
}

MainTheoremReport MainTheoremProbe(const Graph& graph, int dimension,
                                   const GlobalRigidityOptions& options,
                                   const AutomorphismOptions& automorphisms) {
  CheckDimension(dimension);
  MainTheoremReport report;
  report.dimension = dimension;
  report.connected = IsConnected(graph);
  report.vertex_transitive = IsVertexTransitive(graph, automorphisms);
  report.degree = graph.RegularDegree();
  report.degree_threshold = dimension * (dimension + 1);
  report.hypotheses_hold = report.connected && report.vertex_transitive &&
                           report.degree && *report.degree >= report.degree_threshold;
  if (graph.num_vertices() >= 2) report.connectivity = VertexConnectivity(graph);
  if (report.connected && report.vertex_transitive && report.degree &&
      graph.num_vertices() >= 2) {
    report.watkins_bound = (2 * *report.degree + 2) / 3;
    report.watkins_holds = report.connectivity >= report.watkins_bound;
    if (!report.watkins_holds) {
      throw PropertyViolation("connected vertex-transitive graph with connectivity " +
                              std::to_string(report.connectivity) +
                              " below the Watkins bound " +
                              std::to_string(report.watkins_bound));
    }
  }
  report.verdict = DecideGlobalRigidity(graph, dimension, options);
  if (report.hypotheses_hold) {
    if (report.verdict.status == GlobalStatus::kCertifiedNotGloballyRigid) {
      throw PropertyViolation(
          "vertex-transitive graph of degree >= d(d+1) certified not globally "
          "rigid (" + report.verdict.reason + ")");
    }
    report.needs_attention =
        report.verdict.status == GlobalStatus::kInconclusive;
  }
  return report;
}

}  // namespace vtrigid
