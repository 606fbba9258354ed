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

#include "vtrigid/cliques.h"

#include <algorithm>
#include <iterator>
#include <string>

#include "vtrigid/errors.h"

namespace vtrigid {
namespace {

// Bron-Kerbosch with Tomita pivoting over a small local graph given as sorted
// adjacency lists on 0..k-1.
class CliqueEnumerator {
 public:
  CliqueEnumerator(const std::vector<std::vector<int>>& adjacency,
                   int64_t limit)
      : adjacency_(adjacency), limit_(limit) {}

  std::vector<std::vector<int>> Run() {
    std::vector<int> candidates(adjacency_.size());
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
      candidates[i] = i;
    }
    std::vector<int> current;
    Expand(current, candidates, {});
    return std::move(cliques_);
  }

 private:
  static std::vector<int> Intersect(const std::vector<int>& a,
                                    const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  }

  void Expand(std::vector<int>& current, std::vector<int> candidates,
              std::vector<int> excluded) {
    if (candidates.empty()) {
      if (excluded.empty()) {
        if (static_cast<int64_t>(cliques_.size()) >= limit_) {
          throw ResourceError("maximal clique count exceeds limit " +
                              std::to_string(limit_));
        }
        cliques_.push_back(current);
      }
      return;
    }
    // Pivot maximizing |candidates ∩ N(pivot)|.
    int pivot = -1;
    size_t best = 0;
    for (const auto* pool : {&candidates, &excluded}) {
      for (int u : *pool) {
        const size_t hits = Intersect(candidates, adjacency_[u]).size();
        if (pivot < 0 || hits > best) {
          pivot = u;
          best = hits;
        }
      }
    }
    std::vector<int> branch;
    std::set_difference(candidates.begin(), candidates.end(),
                        adjacency_[pivot].begin(), adjacency_[pivot].end(),
                        std::back_inserter(branch));
    for (int v : branch) {
      current.push_back(v);
      Expand(current, Intersect(candidates, adjacency_[v]),
             Intersect(excluded, adjacency_[v]));
      current.pop_back();
      candidates.erase(std::lower_bound(candidates.begin(), candidates.end(), v));
      excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
    }
  }

  const std::vector<std::vector<int>>& adjacency_;
  int64_t limit_;
  std::vector<std::vector<int>> cliques_;
};

}  // namespace

std::vector<std::vector<int>> MaximalNeighborhoodCliques(const Graph& graph,
                                                         int v, int64_t limit) {
  const std::vector<int>& nbrs = graph.Neighbors(v);
  const int k = static_cast<int>(nbrs.size());
  std::vector<std::vector<int>> local(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (graph.HasEdge(nbrs[i], nbrs[j])) {
        local[i].push_back(j);
        local[j].push_back(i);
      }
    }
  }
  for (auto& row : local) std::sort(row.begin(), row.end());

  auto cliques = CliqueEnumerator(local, limit).Run();
  for (auto& clique : cliques) {
    for (int& u : clique) u = nbrs[u];
    std::sort(clique.begin(), clique.end());
  }
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

bool CliqueIntersectionCondition(const Graph& graph, int dimension,
                                 int64_t limit) {
  if (dimension < 2) throw InputError("clique intersection condition needs d >= 2");
  const size_t max_overlap = static_cast<size_t>(dimension - 2);
  for (int v = 0; v < graph.num_vertices(); ++v) {
    const auto cliques = MaximalNeighborhoodCliques(graph, v, limit);
    for (size_t a = 0; a < cliques.size(); ++a) {
      for (size_t b = a + 1; b < cliques.size(); ++b) {
        std::vector<int> common;
        std::set_intersection(cliques[a].begin(), cliques[a].end(),
                              cliques[b].begin(), cliques[b].end(),
                              std::back_inserter(common));
        if (common.size() > max_overlap) return false;
      }
    }
  }
  return true;
}

bool NeighborhoodIsClique(const Graph& graph, int v) {
  return IsClique(graph, graph.Neighbors(v));
}

bool ComponentsAreComplete(const Graph& graph) {
  const auto component = ConnectedComponents(graph);
  std::vector<int64_t> size(graph.num_vertices(), 0);
  std::vector<int64_t> edges(graph.num_vertices(), 0);
  for (int c : component) ++size[c];
  for (const Edge& e : graph.edges()) ++edges[component[e.first]];
  for (int c = 0; c < graph.num_vertices(); ++c) {
    if (edges[c] != size[c] * (size[c] - 1) / 2) return false;
  }
  return true;
}

}  // namespace vtrigid
