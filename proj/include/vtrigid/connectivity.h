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

#ifndef VTRIGID_CONNECTIVITY_H_
#define VTRIGID_CONNECTIVITY_H_

#include <vector>

#include "vtrigid/graph.h"

namespace vtrigid {

struct VertexCut {
  // Vertex connectivity kappa(G). Complete graphs report n-1.
  int connectivity = 0;
  // A separating set of size `connectivity`; empty for complete graphs and
  // for disconnected graphs.
  std::vector<int> separator;
};

// Minimum number of internally disjoint s-t paths for non-adjacent s, t
// (Menger), with an optional early stop once `cap` paths are found.
int LocalVertexConnectivity(const Graph& graph, int s, int t,
                            int cap = -1, std::vector<int>* separator = nullptr);

// kappa(G) by unit-capacity max-flow over the Esfahanian-Hakimi pair set: a
// minimum-degree vertex against each of its non-neighbors, then every
// non-adjacent pair of its neighbors. Throws InputError for n < 2.
VertexCut MinimumVertexCut(const Graph& graph);
int VertexConnectivity(const Graph& graph);

// True iff removing `separator` leaves at least two non-empty components.
bool Disconnects(const Graph& graph, const std::vector<int>& separator);

}  // namespace vtrigid

#endif  // VTRIGID_CONNECTIVITY_H_
