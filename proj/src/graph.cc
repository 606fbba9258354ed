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

#include "vtrigid/graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "vtrigid/errors.h"

namespace vtrigid {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.first < 0 || e.second >= num_vertices_) {
      throw InputError("edge {" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + "} has an endpoint outside 0.." +
                       std::to_string(num_vertices_ - 1));
    }
    if (e.first == e.second) {
      throw InputError("self-loop at vertex " + std::to_string(e.first));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(num_vertices_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

void Graph::CheckVertex(int v) const {
  if (v < 0 || v >= num_vertices_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(num_vertices_));
  }
}

const std::vector<int>& Graph::Neighbors(int v) const {
  CheckVertex(v);
  return adjacency_[v];
}

bool Graph::HasEdge(int u, int v) const {
  if (u == v) return false;
  CheckVertex(u);
  CheckVertex(v);
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                               : adjacency_[v];
  const int target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

std::optional<int> Graph::EdgeIndex(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::IsComplete() const {
  const int64_t n = num_vertices_;
  return static_cast<int64_t>(edges_.size()) == n * (n - 1) / 2;
}

std::optional<int> Graph::RegularDegree() const {
  if (num_vertices_ == 0) return 0;
  const int d = static_cast<int>(adjacency_[0].size());
  for (const auto& nbrs : adjacency_) {
    if (static_cast<int>(nbrs.size()) != d) return std::nullopt;
  }
  return d;
}

Graph Graph::WithEdges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(num_vertices_, std::move(all));
}

Graph Graph::WithoutEdge(const Edge& e) const {
  if (!EdgeIndex(e)) {
    throw InputError("{" + std::to_string(e.first) + "," + std::to_string(e.second) +
                     "} is not an edge");
  }
  std::vector<Edge> rest;
  rest.reserve(edges_.size());
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return Graph(num_vertices_, std::move(rest));
}

Graph Graph::InducedSubgraph(std::span<const int> vertices) const {
  std::vector<int> local(num_vertices_, -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    CheckVertex(vertices[i]);
    local[vertices[i]] = i;
  }
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (local[e.first] >= 0 && local[e.second] >= 0) {
      sub.emplace_back(local[e.first], local[e.second]);
    }
  }
  return Graph(static_cast<int>(vertices.size()), std::move(sub));
}

bool IsClique(const Graph& graph, std::span<const int> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i) {
    graph.CheckVertex(vertices[i]);
    for (size_t j = i + 1; j < vertices.size(); ++j) {
      if (!graph.HasEdge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::vector<int> ConnectedComponents(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<int> component(n, -1);
  std::vector<int> stack;
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    component[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : graph.Neighbors(v)) {
        if (component[w] < 0) {
          component[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return component;
}

int NumConnectedComponents(const Graph& graph) {
  const auto component = ConnectedComponents(graph);
  return component.empty()
             ? 0
             : *std::max_element(component.begin(), component.end()) + 1;
}

bool IsConnected(const Graph& graph) {
  return NumConnectedComponents(graph) <= 1;
}

std::vector<int> EdgeSetVertices(std::span<const Edge> edges) {
  std::vector<int> vertices;
  vertices.reserve(2 * edges.size());
  for (const Edge& e : edges) {
    vertices.push_back(e.first);
    vertices.push_back(e.second);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

namespace {

// Next non-blank, non-comment line. Returns false at end of input.
bool NextDataLine(std::istream& in, std::string& line, int& line_number) {
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void ParseFailure(int line_number, const std::string& what) {
  throw InputError("line " + std::to_string(line_number) + ": " + what);
}

// Parses exactly two integers from `line`; anything else is an error.
std::pair<int64_t, int64_t> ParseIntPair(const std::string& line,
                                         int line_number) {
  std::istringstream fields(line);
  int64_t a = 0;
  int64_t b = 0;
  if (!(fields >> a >> b)) ParseFailure(line_number, "expected two integers");
  std::string trailing;
  if (fields >> trailing && trailing[0] != '#') {
    ParseFailure(line_number, "unexpected token '" + trailing + "'");
  }
  return {a, b};
}

}  // namespace

Graph ReadEdgeList(std::istream& in) {
  std::string line;
  int line_number = 0;
  if (!NextDataLine(in, line, line_number)) {
    throw InputError("line 1: missing header 'n m'");
  }
  const auto [n, m] = ParseIntPair(line, line_number);
  if (n < 0 || m < 0 || n > (1 << 24)) {
    ParseFailure(line_number, "invalid header counts");
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  std::set<Edge> seen;
  for (int64_t i = 0; i < m; ++i) {
    if (!NextDataLine(in, line, line_number)) {
      ParseFailure(line_number + 1, "expected " + std::to_string(m) +
                                        " edges, found " + std::to_string(i));
    }
    const auto [u, v] = ParseIntPair(line, line_number);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      ParseFailure(line_number, "endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) ParseFailure(line_number, "self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    if (!seen.insert(edges.back()).second) ParseFailure(line_number, "duplicate edge");
  }
  if (NextDataLine(in, line, line_number)) {
    ParseFailure(line_number, "more edge lines than the header declares");
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return ReadEdgeList(in);
}

void WriteEdgeList(std::ostream& out, const Graph& graph) {
  out << graph.num_vertices() << ' ' << graph.num_edges() << '\n';
  for (const Edge& e : graph.edges()) out << e.first << ' ' << e.second << '\n';
}

}  // namespace vtrigid
