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

#include "vtrigid/connectivity.h"

#include <algorithm>
#include <deque>
#include <tuple>

#include "vtrigid/errors.h"

namespace vtrigid {
namespace {

// Split-vertex flow network: vertex v becomes in(v)=2v -> out(v)=2v+1 with
// capacity 1; each edge {u,v} becomes out(u)->in(v) and out(v)->in(u) with
// capacity n, so every minimum cut consists of vertex arcs.
class SplitFlowNetwork {
 public:
  explicit SplitFlowNetwork(const Graph& graph) {
    const int n = graph.num_vertices();
    head_.assign(2 * n, -1);
    for (int v = 0; v < n; ++v) AddArc(2 * v, 2 * v + 1, 1);
    for (const Edge& e : graph.edges()) {
      AddArc(2 * e.first + 1, 2 * e.second, n);
      AddArc(2 * e.second + 1, 2 * e.first, n);
    }
  }

  // Max flow from out(s) to in(t), stopping at `cap` if cap >= 0.
  int MaxFlow(int s, int t, int cap) {
    std::fill(flow_.begin(), flow_.end(), 0);
    const int source = 2 * s + 1;
    const int sink = 2 * t;
    int total = 0;
    std::vector<int> parent_arc(head_.size());
    while (cap < 0 || total < cap) {
      std::fill(parent_arc.begin(), parent_arc.end(), -1);
      std::deque<int> queue = {source};
      parent_arc[source] = -2;
      while (!queue.empty() && parent_arc[sink] == -1) {
        const int x = queue.front();
        queue.pop_front();
        for (int a = head_[x]; a >= 0; a = next_[a]) {
          const int y = to_[a];
          if (parent_arc[y] == -1 && Residual(a) > 0) {
            parent_arc[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (parent_arc[sink] == -1) break;
      for (int y = sink; y != source; y = to_[parent_arc[y] ^ 1]) {
        flow_[parent_arc[y]] += 1;
        flow_[parent_arc[y] ^ 1] -= 1;
      }
      ++total;
    }
    last_source_ = source;
    return total;
  }

  // After a complete MaxFlow: vertices whose in-node is residual-reachable
  // from the source but whose out-node is not.
  std::vector<int> MinCutVertices() const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue = {last_source_};
    seen[last_source_] = 1;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int a = head_[x]; a >= 0; a = next_[a]) {
        if (!seen[to_[a]] && Residual(a) > 0) {
          seen[to_[a]] = 1;
          queue.push_back(to_[a]);
        }
      }
    }
    std::vector<int> cut;
    for (int v = 0; 2 * v < static_cast<int>(head_.size()); ++v) {
      if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
    }
    return cut;
  }

 private:
  void AddArc(int from, int to, int capacity) {
    for (auto [x, y, c] : {std::tuple{from, to, capacity}, std::tuple{to, from, 0}}) {
      to_.push_back(y);
      capacity_.push_back(c);
      flow_.push_back(0);
      next_.push_back(head_[x]);
      head_[x] = static_cast<int>(to_.size()) - 1;
    }
  }

  int Residual(int arc) const { return capacity_[arc] - flow_[arc]; }

  std::vector<int> head_;
  std::vector<int> to_;
  std::vector<int> capacity_;
  std::vector<int> flow_;
  std::vector<int> next_;
  int last_source_ = 0;
};

}  // namespace

int LocalVertexConnectivity(const Graph& graph, int s, int t, int cap,
                            std::vector<int>* separator) {
  graph.CheckVertex(s);
  graph.CheckVertex(t);
  if (s == t || graph.HasEdge(s, t)) {
    throw InputError("local vertex connectivity needs distinct non-adjacent vertices");
  }
  SplitFlowNetwork network(graph);
  const int flow = network.MaxFlow(s, t, cap);
  if (separator != nullptr) *separator = network.MinCutVertices();
  return flow;
}

VertexCut MinimumVertexCut(const Graph& graph) {
  const int n = graph.num_vertices();
  if (n < 2) throw InputError("vertex connectivity needs n >= 2");
  if (graph.IsComplete()) return {n - 1, {}};
  if (!IsConnected(graph)) return {0, {}};

  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (graph.Degree(v) < graph.Degree(pivot)) pivot = v;
  }
  SplitFlowNetwork network(graph);
  VertexCut best{graph.Degree(pivot), {}};
  // The neighborhood of a minimum-degree vertex is a valid separator when
  // some vertex lies outside N[pivot].
  if (graph.Degree(pivot) < n - 1) best.separator = graph.Neighbors(pivot);

  auto consider = [&](int s, int t) {
    const int flow = network.MaxFlow(s, t, best.connectivity);
    if (flow < best.connectivity) {
      best.connectivity = flow;
      best.separator = network.MinCutVertices();
    }
  };
  for (int w = 0; w < n; ++w) {
    if (w != pivot && !graph.HasEdge(pivot, w)) consider(pivot, w);
  }
  const auto& nbrs = graph.Neighbors(pivot);
  for (size_t i = 0; i < nbrs.size(); ++i) {
    for (size_t j = i + 1; j < nbrs.size(); ++j) {
      if (!graph.HasEdge(nbrs[i], nbrs[j])) consider(nbrs[i], nbrs[j]);
    }
  }
  return best;
}

int VertexConnectivity(const Graph& graph) {
  return MinimumVertexCut(graph).connectivity;
}

bool Disconnects(const Graph& graph, const std::vector<int>& separator) {
  std::vector<char> removed(graph.num_vertices(), 0);
  for (int v : separator) {
    graph.CheckVertex(v);
    removed[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < graph.num_vertices(); ++v) {
    if (!removed[v]) keep.push_back(v);
  }
  if (keep.size() < 2) return false;
  return !IsConnected(graph.InducedSubgraph(keep));
}

}  // namespace vtrigid
