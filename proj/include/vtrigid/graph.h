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

#ifndef VTRIGID_GRAPH_H_
#define VTRIGID_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vtrigid {

// An unordered vertex pair, always stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  Edge() = default;
  Edge(int u, int v) : first(u < v ? u : v), second(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple undirected graph on the dense vertex set 0..n-1.
//
// The edge set is canonical: every pair is normalized so that the smaller id
// comes first and the list is sorted lexicographically without duplicates.
// Graphs are immutable once constructed.
class Graph {
 public:
  Graph() = default;

  // Throws InputError on self-loops or endpoints >= n. Duplicate pairs are
  // merged, since the edge list denotes a set.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted neighbor list of v. Throws InputError if v is out of range.
  const std::vector<int>& Neighbors(int v) const;
  int Degree(int v) const { return static_cast<int>(Neighbors(v).size()); }

  bool HasEdge(int u, int v) const;

  // Position of {u,v} in edges(), if present.
  std::optional<int> EdgeIndex(const Edge& e) const;

  bool IsComplete() const;
  // Returns the common degree, or nullopt if the graph is not regular.
  std::optional<int> RegularDegree() const;

  Graph WithEdges(std::span<const Edge> extra) const;
  Graph WithoutEdge(const Edge& e) const;
  Graph InducedSubgraph(std::span<const int> vertices) const;

  void CheckVertex(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

// True iff every pair of distinct vertices of `vertices` is adjacent. Sets of
// size 0 or 1 are cliques.
bool IsClique(const Graph& graph, std::span<const int> vertices);

// Component id per vertex, numbered from 0 in order of smallest member.
std::vector<int> ConnectedComponents(const Graph& graph);
int NumConnectedComponents(const Graph& graph);
bool IsConnected(const Graph& graph);

// Vertex set of an edge set, sorted.
std::vector<int> EdgeSetVertices(std::span<const Edge> edges);

// Edge-list text format:
//
//   # optional comment lines
//   n m
//   u v      (m lines, 0-based)
//
// Pairs may appear in either order on read; they are written with u < v.
// Parse errors throw InputError with the offending line number.
Graph ReadEdgeList(std::istream& in);
Graph ReadEdgeListFile(const std::string& path);
void WriteEdgeList(std::ostream& out, const Graph& graph);

}  // namespace vtrigid

#endif  // VTRIGID_GRAPH_H_
