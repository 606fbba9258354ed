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

#ifndef VTRIGID_CLIQUES_H_
#define VTRIGID_CLIQUES_H_

#include <cstdint>
#include <vector>

#include "vtrigid/graph.h"

namespace vtrigid {

inline constexpr int64_t kDefaultCliqueLimit = 1'000'000;

// All inclusion-maximal cliques of G[N(v)], each sorted, in lexicographic
// order. Enumeration is pivoting Bron-Kerbosch restricted to the
// neighborhood. An isolated vertex has the single maximal clique {} of its
// empty neighborhood. Throws ResourceError if more than `limit` cliques are
// found.
std::vector<std::vector<int>> MaximalNeighborhoodCliques(
    const Graph& graph, int v, int64_t limit = kDefaultCliqueLimit);

// True iff for every vertex v, any two distinct maximal cliques of G[N(v)]
// share at most d-2 vertices. Requires d >= 2.
bool CliqueIntersectionCondition(const Graph& graph, int dimension,
                                 int64_t limit = kDefaultCliqueLimit);

bool NeighborhoodIsClique(const Graph& graph, int v);

// True iff every connected component induces a complete graph.
bool ComponentsAreComplete(const Graph& graph);

}  // namespace vtrigid

#endif  // VTRIGID_CLIQUES_H_
