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

#ifndef VTRIGID_AUTOMORPHISMS_H_
#define VTRIGID_AUTOMORPHISMS_H_

#include <cstdint>
#include <vector>

#include "vtrigid/graph.h"

namespace vtrigid {

// A bijection on 0..n-1, stored as its image array.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  // Throws InputError unless `image` is a permutation.
  explicit VertexPermutation(std::vector<int> image);

  static VertexPermutation Identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[v]; }
  const std::vector<int>& image() const { return image_; }
  bool IsIdentity() const;

  Edge Apply(const Edge& e) const { return Edge(image_[e.first], image_[e.second]); }

  friend bool operator==(const VertexPermutation&,
                         const VertexPermutation&) = default;

 private:
  std::vector<int> image_;
};

bool IsAutomorphism(const Graph& graph, const VertexPermutation& sigma);

struct AutomorphismGenerators {
  int num_vertices = 0;
  std::vector<VertexPermutation> generators;
};

struct AutomorphismOptions {
  int max_vertices = 1000;
  int64_t node_budget = 10'000'000;
};

// A generating set of Aut(G).
//
// Individualization-refinement search along a stabilizer chain: at each level
// the first non-trivial cell of the refined partition supplies a base point b,
// and for every w in that cell not already in the orbit of b under the
// generators found so far, a backtracking search looks for an automorphism
// fixing the earlier base points and sending b to w. Colors are refined by
// (own color, multiset of neighbor colors) to an equitable partition after
// every individualization. Throws ResourceError when n exceeds max_vertices
// or the search exceeds node_budget.
AutomorphismGenerators FindAutomorphismGenerators(
    const Graph& graph, const AutomorphismOptions& options = {});

// Orbit representative (smallest member) for every vertex.
std::vector<int> VertexOrbits(const AutomorphismGenerators& group);
std::vector<int> VertexOrbit(const AutomorphismGenerators& group, int v);

bool IsVertexTransitive(const Graph& graph,
                        const AutomorphismOptions& options = {});

// Orbit of the pair {u,v} under the group, sorted. Requires u != v.
std::vector<Edge> PairOrbit(const AutomorphismGenerators& group, int u, int v);
std::vector<Edge> PairOrbit(const Graph& graph, int u, int v,
                            const AutomorphismOptions& options = {});

// Partition of all n(n-1)/2 vertex pairs into orbits, each sorted, ordered by
// smallest member.
std::vector<std::vector<Edge>> PairOrbits(const AutomorphismGenerators& group);

}  // namespace vtrigid

#endif  // VTRIGID_AUTOMORPHISMS_H_
