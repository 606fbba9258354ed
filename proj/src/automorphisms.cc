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

#include "vtrigid/automorphisms.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "vtrigid/errors.h"

namespace vtrigid {

VertexPermutation::VertexPermutation(std::vector<int> image)
    : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= static_cast<int>(image_.size()) || seen[x]) {
      throw InputError("image is not a permutation");
    }
    seen[x] = 1;
  }
}

VertexPermutation VertexPermutation::Identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 0);
  return VertexPermutation(std::move(image));
}

bool VertexPermutation::IsIdentity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

bool IsAutomorphism(const Graph& graph, const VertexPermutation& sigma) {
  if (sigma.size() != graph.num_vertices()) return false;
  for (const Edge& e : graph.edges()) {
    if (!graph.HasEdge(sigma(e.first), sigma(e.second))) return false;
  }
  return true;
}

namespace {

uint64_t Mix(uint64_t h, uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

// An ordered partition of the vertices: color[v] in 0..num_colors-1. The
// trace summarizes how it was obtained so that two colorings produced by the
// same operations on isomorphic inputs can be compared cheaply.
struct Coloring {
  std::vector<int> color;
  int num_colors = 0;
  uint64_t trace = 0;

  bool Discrete() const { return num_colors == static_cast<int>(color.size()); }
};

class RefinementSearch {
 public:
  RefinementSearch(const Graph& graph, int64_t node_budget)
      : graph_(graph), node_budget_(node_budget) {}

  // Iterated neighborhood-color refinement to the coarsest equitable
  // partition finer than `color`.
  Coloring Refine(std::vector<int> color, uint64_t trace) {
    ChargeNode();
    const int n = graph_.num_vertices();
    std::vector<std::vector<int>> keys(n);
    std::vector<int> order(n);
    int num_colors = -1;
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& key = keys[v];
        key.clear();
        key.push_back(color[v]);
        for (int w : graph_.Neighbors(v)) key.push_back(color[w]);
        std::sort(key.begin() + 1, key.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return keys[a] < keys[b]; });
      int next = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) {
          ++next;
          trace = Mix(trace, static_cast<uint64_t>(i));
        }
        if (i == 0 || keys[order[i]] != keys[order[i - 1]]) {
          for (int x : keys[order[i]]) trace = Mix(trace, static_cast<uint64_t>(x));
        }
        color[order[i]] = next;
      }
      const int refined = n == 0 ? 0 : next + 1;
      if (refined == num_colors) break;
      num_colors = refined;
    }
    return {std::move(color), num_colors, trace};
  }

  // Splits v off into its own cell placed before the rest of its old cell,
  // then refines.
  Coloring Individualize(const Coloring& base, int v) {
    std::vector<int> color(base.color.size());
    for (size_t u = 0; u < color.size(); ++u) {
      color[u] = 2 * base.color[u] + (static_cast<int>(u) == v ? 0 : 1);
    }
    return Refine(std::move(color), Mix(base.trace, base.color[v]));
  }

  // First vertex of the first non-singleton cell.
  static int TargetVertex(const Coloring& c, int* target_color) {
    std::vector<int> count(c.num_colors, 0);
    std::vector<int> first(c.num_colors, -1);
    for (int v = 0; v < static_cast<int>(c.color.size()); ++v) {
      ++count[c.color[v]];
      if (first[c.color[v]] < 0) first[c.color[v]] = v;
    }
    for (int k = 0; k < c.num_colors; ++k) {
      if (count[k] > 1) {
        *target_color = k;
        return first[k];
      }
    }
    return -1;
  }

  // Looks for an automorphism mapping the left coloring at `depth` of the
  // fixed left path to `right`.
  bool Search(const std::vector<Coloring>& left_path, int depth,
              const Coloring& right, VertexPermutation* found) {
    const Coloring& left = left_path[depth];
    if (left.trace != right.trace || left.num_colors != right.num_colors) {
      return false;
    }
    if (left.Discrete()) {
      const int n = static_cast<int>(left.color.size());
      std::vector<int> right_vertex(n);
      for (int v = 0; v < n; ++v) right_vertex[right.color[v]] = v;
      std::vector<int> image(n);
      for (int v = 0; v < n; ++v) image[v] = right_vertex[left.color[v]];
      VertexPermutation sigma(std::move(image));
      if (!IsAutomorphism(graph_, sigma)) return false;
      *found = std::move(sigma);
      return true;
    }
    int cell = -1;
    TargetVertex(left, &cell);
    for (int y = 0; y < static_cast<int>(right.color.size()); ++y) {
      if (right.color[y] != cell) continue;
      if (Search(left_path, depth + 1, Individualize(right, y), found)) {
        return true;
      }
    }
    return false;
  }

 private:
  void ChargeNode() {
    if (++nodes_ > node_budget_) {
      throw ResourceError("automorphism search exceeded node budget " +
                          std::to_string(node_budget_));
    }
  }

  const Graph& graph_;
  int64_t node_budget_;
  int64_t nodes_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

AutomorphismGenerators FindAutomorphismGenerators(
    const Graph& graph, const AutomorphismOptions& options) {
  const int n = graph.num_vertices();
  if (n > options.max_vertices) {
    throw ResourceError("automorphism search limited to n <= " +
                        std::to_string(options.max_vertices));
  }
  AutomorphismGenerators group;
  group.num_vertices = n;
  if (n == 0) return group;

  RefinementSearch search(graph, options.node_budget);
  // Leftmost path: base points b_0, b_1, ... and the colorings after
  // individualizing each prefix.
  std::vector<Coloring> path = {search.Refine(std::vector<int>(n, 0), 0)};
  std::vector<int> base;
  std::vector<int> base_cell;
  while (!path.back().Discrete()) {
    int cell = -1;
    const int b = RefinementSearch::TargetVertex(path.back(), &cell);
    base.push_back(b);
    base_cell.push_back(cell);
    path.push_back(search.Individualize(path.back(), b));
  }

  // Deepest level first: every generator found so far fixes the current
  // prefix, so all of them prune the orbit of the current base point.
  for (int level = static_cast<int>(base.size()) - 1; level >= 0; --level) {
    const Coloring& parent = path[level];
    UnionFind orbits(n);
    for (const auto& g : group.generators) {
      for (int v = 0; v < n; ++v) orbits.Union(v, g(v));
    }
    const int b = base[level];
    for (int w = 0; w < n; ++w) {
      if (w == b || parent.color[w] != base_cell[level]) continue;
      if (orbits.Find(w) == orbits.Find(b)) continue;
      VertexPermutation sigma;
      if (search.Search(path, level + 1, search.Individualize(parent, w), &sigma)) {
        for (int v = 0; v < n; ++v) orbits.Union(v, sigma(v));
        group.generators.push_back(std::move(sigma));
      }
    }
  }
  return group;
}

std::vector<int> VertexOrbits(const AutomorphismGenerators& group) {
  UnionFind orbits(group.num_vertices);
  for (const auto& g : group.generators) {
    for (int v = 0; v < group.num_vertices; ++v) orbits.Union(v, g(v));
  }
  std::vector<int> rep(group.num_vertices);
  for (int v = 0; v < group.num_vertices; ++v) rep[v] = orbits.Find(v);
  return rep;
}

std::vector<int> VertexOrbit(const AutomorphismGenerators& group, int v) {
  if (v < 0 || v >= group.num_vertices) throw InputError("vertex out of range");
  const auto rep = VertexOrbits(group);
  std::vector<int> orbit;
  for (int u = 0; u < group.num_vertices; ++u) {
    if (rep[u] == rep[v]) orbit.push_back(u);
  }
  return orbit;
}

bool IsVertexTransitive(const Graph& graph, const AutomorphismOptions& options) {
  if (graph.num_vertices() < 1) throw InputError("vertex transitivity needs n >= 1");
  const auto group = FindAutomorphismGenerators(graph, options);
  return static_cast<int>(VertexOrbit(group, 0).size()) == graph.num_vertices();
}

std::vector<Edge> PairOrbit(const AutomorphismGenerators& group, int u, int v) {
  const int n = group.num_vertices;
  if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("vertex out of range");
  if (u == v) throw InputError("pair orbit needs distinct vertices");
  std::vector<Edge> orbit = {Edge(u, v)};
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  seen[static_cast<size_t>(orbit[0].first) * n + orbit[0].second] = 1;
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : group.generators) {
      const Edge image = g.Apply(orbit[i]);
      char& mark = seen[static_cast<size_t>(image.first) * n + image.second];
      if (!mark) {
        mark = 1;
        orbit.push_back(image);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Edge> PairOrbit(const Graph& graph, int u, int v,
                            const AutomorphismOptions& options) {
  graph.CheckVertex(u);
  graph.CheckVertex(v);
  return PairOrbit(FindAutomorphismGenerators(graph, options), u, v);
}

std::vector<std::vector<Edge>> PairOrbits(const AutomorphismGenerators& group) {
  const int n = group.num_vertices;
  std::vector<char> covered(static_cast<size_t>(n) * n, 0);
  std::vector<std::vector<Edge>> orbits;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (covered[static_cast<size_t>(u) * n + v]) continue;
      orbits.push_back(PairOrbit(group, u, v));
      for (const Edge& e : orbits.back()) {
        covered[static_cast<size_t>(e.first) * n + e.second] = 1;
      }
    }
  }
  return orbits;
}

}  // namespace vtrigid
