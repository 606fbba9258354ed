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

#include "vtrigid/constructions.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "vtrigid/errors.h"
#include "vtrigid/products.h"

namespace vtrigid {

Graph CompleteGraph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

Graph PathGraph(int n) {
  if (n < 1) throw InputError("path needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

Graph CycleGraph(int n) {
  if (n < 3) throw InputError("cycle needs n >= 3");
  return CirculantGraph(n, {1});
}

Graph CirculantGraph(int n, const std::vector<int>& connections) {
  if (n < 1) throw InputError("circulant needs n >= 1");
  std::vector<Edge> edges;
  for (int c : connections) {
    if (c < 1 || c > n / 2) {
      throw InputError("circulant connection " + std::to_string(c) +
                       " outside 1.." + std::to_string(n / 2));
    }
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + c) % n);
  }
  return Graph(n, std::move(edges));
}

Graph CompleteBipartiteGraph(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite parts must be non-empty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, std::move(edges));
}

Graph PetersenGraph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, std::move(edges));
}

Graph WheelGraph(int rim) {
  if (rim < 3) throw InputError("wheel needs a rim of at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 1; i <= rim; ++i) {
    edges.emplace_back(0, i);
    edges.emplace_back(i, i % rim + 1);
  }
  return Graph(rim + 1, std::move(edges));
}

namespace {

const std::map<std::string, FamilyKind>& KindNames() {
  static const auto* names = new std::map<std::string, FamilyKind>{
      {"complete", FamilyKind::kComplete},
      {"cycle", FamilyKind::kCycle},
      {"circulant", FamilyKind::kCirculant},
      {"complete-bipartite", FamilyKind::kCompleteBipartite},
      {"lexicographic-product", FamilyKind::kLexicographicProduct},
      {"tight-counterexample", FamilyKind::kTightCounterexample},
      {"clique-matching", FamilyKind::kCliqueMatching},
  };
  return *names;
}

std::string KindName(FamilyKind kind) {
  for (const auto& [name, k] : KindNames()) {
    if (k == kind) return name;
  }
  return "unknown";
}

int ParseInt(const std::string& key, std::string_view text) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw InputError("parameter " + key + ": '" + std::string(text) +
                     "' is not an integer");
  }
  return value;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

void Require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

void ValidateSpec(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kComplete:
      Require(spec.n >= 1, "complete needs n >= 1");
      break;
    case FamilyKind::kCycle:
      Require(spec.n >= 3, "cycle needs n >= 3");
      break;
    case FamilyKind::kCirculant: {
      Require(spec.n >= 1, "circulant needs n >= 1");
      Require(!spec.connections.empty(), "circulant needs a connection set s=...");
      for (int c : spec.connections) {
        Require(c >= 1 && c <= spec.n / 2,
                "circulant connection " + std::to_string(c) + " outside 1.." +
                    std::to_string(spec.n / 2));
      }
      auto sorted = spec.connections;
      std::sort(sorted.begin(), sorted.end());
      Require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
              "circulant connections repeat");
      break;
    }
    case FamilyKind::kCompleteBipartite:
      Require(spec.a >= 1 && spec.b >= 1, "complete-bipartite needs a, b >= 1");
      break;
    case FamilyKind::kLexicographicProduct:
      Require(spec.factors.size() == 2, "lexicographic-product needs g=... and h=...");
      break;
    case FamilyKind::kTightCounterexample:
      Require(spec.d >= 2, "tight-counterexample needs d >= 2");
      Require(spec.d <= 10, "tight-counterexample supports d <= 10");
      break;
    case FamilyKind::kCliqueMatching:
      Require(spec.s >= 1 && spec.k >= 1, "clique-matching needs s, k >= 1");
      for (const Edge& e : spec.matching) {
        Require(e.first != e.second && e.first >= 0 && e.second < spec.s * spec.k,
                "clique-matching pair outside 0.." + std::to_string(spec.s * spec.k - 1));
      }
      break;
  }
}

}  // namespace

FamilySpec ParseFamilySpec(const std::vector<std::string>& tokens) {
  Require(!tokens.empty(), "empty family spec");
  std::string kind_name = tokens[0];
  std::replace(kind_name.begin(), kind_name.end(), '_', '-');
  const auto kind = KindNames().find(kind_name);
  Require(kind != KindNames().end(), "unknown family kind '" + tokens[0] + "'");
  FamilySpec spec;
  spec.kind = kind->second;
  std::vector<std::string> factor_text(2);
  for (size_t i = 1; i < tokens.size(); ++i) {
    const auto eq = tokens[i].find('=');
    Require(eq != std::string::npos && eq > 0,
            "expected key=value, got '" + tokens[i] + "'");
    const std::string key = tokens[i].substr(0, eq);
    const std::string value = tokens[i].substr(eq + 1);
    if (key == "n") {
      spec.n = ParseInt(key, value);
    } else if (key == "a") {
      spec.a = ParseInt(key, value);
    } else if (key == "b") {
      spec.b = ParseInt(key, value);
    } else if (key == "d") {
      spec.d = ParseInt(key, value);
    } else if (key == "k") {
      spec.k = ParseInt(key, value);
    } else if (key == "s" && spec.kind == FamilyKind::kCirculant) {
      for (const auto& part : Split(value, ',')) {
        spec.connections.push_back(ParseInt(key, part));
      }
    } else if (key == "s") {
      spec.s = ParseInt(key, value);
    } else if (key == "matching") {
      for (const auto& pair : Split(value, ',')) {
        const auto dash = pair.find('-');
        Require(dash != std::string::npos, "matching pair '" + pair + "' needs u-v");
        spec.matching.emplace_back(ParseInt(key, pair.substr(0, dash)),
                                   ParseInt(key, pair.substr(dash + 1)));
      }
    } else if (key == "g" || key == "h") {
      factor_text[key == "g" ? 0 : 1] = value;
    } else {
      throw InputError("unknown parameter '" + key + "'");
    }
  }
  if (spec.kind == FamilyKind::kLexicographicProduct) {
    for (const auto& text : factor_text) {
      Require(!text.empty(), "lexicographic-product needs g=... and h=...");
      spec.factors.push_back(ParseFamilySpec(Split(text, '/')));
    }
  }
  ValidateSpec(spec);
  return spec;
}

FamilySpec ParseFamilySpec(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string token;
  while (in >> token) tokens.push_back(token);
  return ParseFamilySpec(tokens);
}

std::string FormatFamilySpec(const FamilySpec& spec) {
  std::ostringstream out;
  out << KindName(spec.kind);
  auto join = [&](char sep, const auto& items, auto&& fmt) {
    for (size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out << sep;
      fmt(items[i]);
    }
  };
  switch (spec.kind) {
    case FamilyKind::kComplete:
    case FamilyKind::kCycle:
      out << " n=" << spec.n;
      break;
    case FamilyKind::kCirculant:
      out << " n=" << spec.n << " s=";
      join(',', spec.connections, [&](int c) { out << c; });
      break;
    case FamilyKind::kCompleteBipartite:
      out << " a=" << spec.a << " b=" << spec.b;
      break;
    case FamilyKind::kLexicographicProduct:
      for (int i = 0; i < 2; ++i) {
        std::string factor = FormatFamilySpec(spec.factors[i]);
        std::replace(factor.begin(), factor.end(), ' ', '/');
        out << (i == 0 ? " g=" : " h=") << factor;
      }
      break;
    case FamilyKind::kTightCounterexample:
      out << " d=" << spec.d;
      break;
    case FamilyKind::kCliqueMatching:
      out << " s=" << spec.s << " k=" << spec.k;
      if (!spec.matching.empty()) {
        out << " matching=";
        join(',', spec.matching,
             [&](const Edge& e) { out << e.first << '-' << e.second; });
      }
      break;
  }
  return out.str();
}

namespace {

// s copies of K_k on copy-major ids plus `loose` edges.
ConstructedGraph CliquesPlusMatching(int s, int k, std::vector<Edge> loose) {
  ConstructedGraph out;
  CliqueProvenance cliques;
  cliques.clique_size = k;
  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    std::vector<int> copy(k);
    std::iota(copy.begin(), copy.end(), i * k);
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) edges.emplace_back(copy[a], copy[b]);
    }
    cliques.copies.push_back(std::move(copy));
  }
  std::sort(loose.begin(), loose.end());
  loose.erase(std::unique(loose.begin(), loose.end()), loose.end());
  edges.insert(edges.end(), loose.begin(), loose.end());
  cliques.loose = std::move(loose);
  out.graph = Graph(s * k, std::move(edges));
  out.cliques = std::move(cliques);
  return out;
}

}  // namespace

std::vector<Edge> PrintedRuleMatching(int s, int k) {
  std::vector<Edge> matching;
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      const int u = (i % s) * k + (j % k);
      const int v = ((j + 1) % s) * k + (i % k);
      if (u != v) matching.emplace_back(u, v);
    }
  }
  return matching;
}

// Copy a uses its slot t for copy t (t < a) or copy t+1 (t >= a).
std::vector<Edge> CopyPairMatching(int s, int k) {
  std::vector<Edge> matching;
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) matching.emplace_back(a * k + (b - 1), b * k + a);
  }
  return matching;
}

ConstructedGraph Construct(const FamilySpec& spec,
                           const AutomorphismOptions& automorphisms) {
  ValidateSpec(spec);
  ConstructedGraph out;
  switch (spec.kind) {
    case FamilyKind::kComplete:
      out.graph = CompleteGraph(spec.n);
      break;
    case FamilyKind::kCycle:
      out.graph = CycleGraph(spec.n);
      break;
    case FamilyKind::kCirculant:
      out.graph = CirculantGraph(spec.n, spec.connections);
      break;
    case FamilyKind::kCompleteBipartite:
      out.graph = CompleteBipartiteGraph(spec.a, spec.b);
      break;
    case FamilyKind::kLexicographicProduct:
      out.graph = LexicographicProduct(Construct(spec.factors[0], automorphisms).graph,
                                       Construct(spec.factors[1], automorphisms).graph);
      break;
    case FamilyKind::kCliqueMatching:
      out = CliquesPlusMatching(spec.s, spec.k, spec.matching);
      break;
    case FamilyKind::kTightCounterexample: {
      const int s = spec.d * (spec.d + 1);
      const int k = s - 1;
      out = CliquesPlusMatching(s, k, PrintedRuleMatching(s, k));
      out.matching_rule = "printed";
      StructureReport report = VerifyCounterexampleStructure(
          out.graph, *out.cliques, spec.d, automorphisms);
      if (!report.ok()) {
        out = CliquesPlusMatching(s, k, CopyPairMatching(s, k));
        out.matching_rule = "fallback";
        report = VerifyCounterexampleStructure(out.graph, *out.cliques, spec.d,
                                               automorphisms);
        if (!report.ok()) {
          throw ValidationError(report.failures.front().substr(0, 3),
                                report.failures.front());
        }
      }
      break;
    }
  }
  out.spec = spec;
  return out;
}

StructureReport VerifyCounterexampleStructure(const Graph& graph,
                                              const CliqueProvenance& cliques,
                                              int dimension,
                                              const AutomorphismOptions& automorphisms) {
  if (dimension < 2) throw InputError("counterexample structure needs d >= 2");
  StructureReport report;
  const int n = graph.num_vertices();
  const int k = cliques.clique_size;

  // (a)
  std::vector<int> copy_of(n, -1);
  std::string problem;
  for (size_t i = 0; i < cliques.copies.size() && problem.empty(); ++i) {
    const auto& copy = cliques.copies[i];
    if (static_cast<int>(copy.size()) != k) {
      problem = "copy " + std::to_string(i) + " has " + std::to_string(copy.size()) +
                " vertices, expected " + std::to_string(k);
    }
    for (int v : copy) {
      if (v < 0 || v >= n || copy_of[v] >= 0) {
        problem = "copies overlap or leave the vertex range";
        break;
      }
      copy_of[v] = static_cast<int>(i);
    }
    if (problem.empty() && !IsClique(graph, copy)) {
      problem = "copy " + std::to_string(i) + " is not complete in G";
    }
  }
  if (problem.empty() &&
      std::find(copy_of.begin(), copy_of.end(), -1) != copy_of.end()) {
    problem = "copies do not span V(G)";
  }
  if (problem.empty()) {
    std::vector<Edge> outside;
    for (const Edge& e : graph.edges()) {
      if (copy_of[e.first] != copy_of[e.second]) outside.push_back(e);
    }
    std::vector<Edge> declared = cliques.loose;
    std::sort(declared.begin(), declared.end());
    declared.erase(std::unique(declared.begin(), declared.end()), declared.end());
    for (const Edge& e : declared) {
      if (e.first < 0 || e.second >= n || copy_of[e.first] == copy_of[e.second]) {
        problem = "loose edge {" + std::to_string(e.first) + "," +
                  std::to_string(e.second) + "} lies inside one copy";
        break;
      }
    }
    if (problem.empty() && declared != outside) {
      problem = "declared E_0 differs from the edges outside the copies";
    }
  }
  report.cliques_ok = problem.empty();
  if (!report.cliques_ok) report.failures.push_back("(a) " + problem);

  // (b)
  const int target = dimension * (dimension + 1) - 1;
  const auto degree = graph.RegularDegree();
  report.regular_ok = degree && *degree == target && k == target;
  if (!report.regular_ok) {
    report.failures.push_back(
        "(b) expected " + std::to_string(target) + "-regular with K_" +
        std::to_string(target) + " copies, got " +
        (degree ? std::to_string(*degree) + "-regular" : std::string("irregular")) +
        " with K_" + std::to_string(k) + " copies");
  }

  // (c)
  std::vector<int> loose_degree(n, 0);
  for (const Edge& e : cliques.loose) {
    if (e.first >= 0 && e.second < n) {
      ++loose_degree[e.first];
      ++loose_degree[e.second];
    }
  }
  report.matching_ok =
      std::all_of(loose_degree.begin(), loose_degree.end(), [](int x) { return x == 1; });
  if (!report.matching_ok) {
    report.failures.push_back("(c) some vertex is not on exactly one E_0 edge");
  }

  // (d)
  report.transitive_ok = n >= 1 && IsVertexTransitive(graph, automorphisms);
  if (!report.transitive_ok) report.failures.push_back("(d) not vertex-transitive");

  // (e)
  report.connected_ok = n >= 1 && IsConnected(graph);
  if (!report.connected_ok) report.failures.push_back("(e) not connected");
  return report;
}

TightnessReport VerifyTightness(const Graph& graph, const CliqueProvenance& cliques,
                                int dimension, const RankOptions& options,
                                const AutomorphismOptions& automorphisms) {
  if (dimension < 2) throw InputError("tightness verification needs d >= 2");
  TightnessReport report;
  report.dimension = dimension;
  report.structure =
      VerifyCounterexampleStructure(graph, cliques, dimension, automorphisms);
  if (!report.structure.cliques_ok) {
    throw ValidationError("(a)", report.structure.failures.front());
  }
  if (cliques.loose.empty()) {
    throw ValidationError("(c)", "no E_0 edge to remove");
  }
  const int64_t d = dimension;
  const int64_t k = cliques.clique_size;
  const int64_t s = static_cast<int64_t>(cliques.copies.size());
  const int64_t binom = d * (d + 1) / 2;
  report.clique_size = static_cast<int>(k);
  report.num_copies = static_cast<int>(s);
  report.loose_edges = static_cast<int>(cliques.loose.size());
  report.regular = report.structure.regular_ok;
  report.vertex_transitive = report.structure.transitive_ok;
  report.spanning_cliques = report.structure.cliques_ok;
  report.chain_guaranteed = s >= d * (d + 1);

  std::vector<Edge> loose = cliques.loose;
  std::sort(loose.begin(), loose.end());
  report.removed_edge = loose.front();

  CliquePartition partition;
  partition.loose.assign(loose.begin() + 1, loose.end());
  for (const auto& copy : cliques.copies) {
    std::vector<Edge> part;
    for (size_t a = 0; a < copy.size(); ++a) {
      for (size_t b = a + 1; b < copy.size(); ++b) part.emplace_back(copy[a], copy[b]);
    }
    partition.parts.push_back(std::move(part));
  }
  const Graph rest = graph.WithoutEdge(report.removed_edge);
  report.partition_bound = PartitionRankBound(partition, rest, dimension);
  if (report.structure.matching_ok && (k * s) % 2 == 0) {
    report.formula_bound = k * s / 2 - 1 + s * (d * k - binom);
    if (*report.formula_bound != report.partition_bound) {
      throw PropertyViolation("closed-form bound " +
                              std::to_string(*report.formula_bound) +
                              " disagrees with the partition bound " +
                              std::to_string(report.partition_bound));
    }
  }
  report.full_rank = FullRigidityRank(graph.num_vertices(), dimension);
  report.rank_without_edge = GenericRank(rest.edges(), rest, dimension, options);
  if (report.rank_without_edge > report.partition_bound) {
    throw PropertyViolation("rank(E - e) = " + std::to_string(report.rank_without_edge) +
                            " exceeds the partition bound " +
                            std::to_string(report.partition_bound));
  }
  if (report.chain_guaranteed && report.partition_bound >= report.full_rank) {
    throw PropertyViolation("bound " + std::to_string(report.partition_bound) +
                            " does not fall below full rank " +
                            std::to_string(report.full_rank));
  }
  report.not_rigid_minus_edge = report.rank_without_edge < report.full_rank;
  report.not_globally_rigid = report.not_rigid_minus_edge;
  return report;
}

}  // namespace vtrigid
