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

#include "vtrigid/reports.h"

#include <sstream>

#include "vtrigid/errors.h"

namespace vtrigid {

using nlohmann::json;

namespace {

json EdgeJson(const Edge& e) { return json::array({e.first, e.second}); }

json OptionalEdgeJson(const std::optional<Edge>& e) {
  return e ? EdgeJson(*e) : json(nullptr);
}

Edge EdgeFromJson(const json& j) {
  if (!j.is_array() || j.size() != 2) throw InputError("edge must be [u, v]");
  return Edge(j[0].get<int>(), j[1].get<int>());
}

std::optional<Edge> OptionalEdgeFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  return EdgeFromJson(j);
}

json EdgesJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(EdgeJson(e));
  return out;
}

// Wraps nlohmann exceptions so that malformed documents surface as input
// errors.
template <typename F>
auto Parse(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

json ToJson(const RankReport& r) {
  return {{"n", r.num_vertices}, {"m", r.num_edges},   {"d", r.dimension},
          {"rank", r.rank},      {"cap", r.cap},       {"independent", r.independent},
          {"rigid", r.rigid},    {"trials", r.trials}, {"seed", r.seed}};
}

RankReport RankReportFromJson(const json& j) {
  return Parse("rank report", [&] {
    RankReport r;
    r.num_vertices = j.at("n").get<int>();
    r.num_edges = j.at("m").get<int>();
    r.dimension = j.at("d").get<int>();
    r.rank = j.at("rank").get<int>();
    r.cap = j.at("cap").get<int64_t>();
    r.independent = j.at("independent").get<bool>();
    r.rigid = j.at("rigid").get<bool>();
    r.trials = j.at("trials").get<int>();
    r.seed = j.at("seed").get<uint64_t>();
    return r;
  });
}

json ToJson(const RedundancyReport& r) {
  return {{"rigid", r.rigid},
          {"redundantly_rigid", r.redundantly_rigid},
          {"rank", r.rank},
          {"full_rank", r.full_rank},
          {"critical_edge", OptionalEdgeJson(r.critical_edge)},
          {"rank_without_edge", r.critical_edge ? json(r.rank_without_edge) : json(nullptr)}};
}

json ToJson(const GlobalRigidityVerdict& v) {
  return {{"status", GlobalStatusName(v.status)},
          {"reason", v.reason},
          {"connectivity", v.connectivity},
          {"separator", v.separator},
          {"critical_edge", OptionalEdgeJson(v.critical_edge)},
          {"missing_pair", OptionalEdgeJson(v.missing_pair)},
          {"rank", v.rank},
          {"rank_without_edge", v.rank_without_edge},
          {"full_rank", v.full_rank},
          {"certificate_seed",
           v.certificate_seed ? json(*v.certificate_seed) : json(nullptr)},
          {"stress_rank", v.stress_rank},
          {"stress_target", v.stress_target},
          {"seeds_tried", v.seeds_tried}};
}

GlobalRigidityVerdict GlobalRigidityVerdictFromJson(const json& j) {
  return Parse("verdict", [&] {
    GlobalRigidityVerdict v;
    const std::string status = j.at("status").get<std::string>();
    bool known = false;
    for (auto s : {GlobalStatus::kCertifiedGloballyRigid,
                   GlobalStatus::kCertifiedNotGloballyRigid,
                   GlobalStatus::kInconclusive}) {
      if (status == GlobalStatusName(s)) {
        v.status = s;
        known = true;
      }
    }
    if (!known) throw InputError("unknown verdict status '" + status + "'");
    v.reason = j.at("reason").get<std::string>();
    v.connectivity = j.at("connectivity").get<int>();
    v.separator = j.at("separator").get<std::vector<int>>();
    v.critical_edge = OptionalEdgeFromJson(j.at("critical_edge"));
    v.missing_pair = OptionalEdgeFromJson(j.at("missing_pair"));
    v.rank = j.at("rank").get<int>();
    v.rank_without_edge = j.at("rank_without_edge").get<int>();
    v.full_rank = j.at("full_rank").get<int64_t>();
    if (!j.at("certificate_seed").is_null()) {
      v.certificate_seed = j.at("certificate_seed").get<uint64_t>();
    }
    v.stress_rank = j.at("stress_rank").get<int>();
    v.stress_target = j.at("stress_target").get<int>();
    v.seeds_tried = j.at("seeds_tried").get<std::vector<uint64_t>>();
    return v;
  });
}

json ToJson(const MainTheoremReport& r) {
  return {{"d", r.dimension},
          {"connected", r.connected},
          {"vertex_transitive", r.vertex_transitive},
          {"degree", r.degree ? json(*r.degree) : json(nullptr)},
          {"degree_threshold", r.degree_threshold},
          {"hypotheses_hold", r.hypotheses_hold},
          {"connectivity", r.connectivity},
          {"watkins_bound", r.watkins_bound},
          {"watkins_holds", r.watkins_holds},
          {"verdict", ToJson(r.verdict)},
          {"needs_attention", r.needs_attention}};
}

json ToJson(const StructureReport& r) {
  return {{"a_cliques", r.cliques_ok},       {"b_regular", r.regular_ok},
          {"c_matching", r.matching_ok},     {"d_vertex_transitive", r.transitive_ok},
          {"e_connected", r.connected_ok},   {"failures", r.failures},
          {"ok", r.ok()}};
}

json ToJson(const TightnessReport& r) {
  return {{"d", r.dimension},
          {"k", r.clique_size},
          {"s", r.num_copies},
          {"loose_edges", r.loose_edges},
          {"removed_edge", EdgeJson(r.removed_edge)},
          {"formula_bound", r.formula_bound ? json(*r.formula_bound) : json(nullptr)},
          {"partition_bound", r.partition_bound},
          {"full_rank", r.full_rank},
          {"rank_without_edge", r.rank_without_edge},
          {"chain_guaranteed", r.chain_guaranteed},
          {"regular", r.regular},
          {"vertex_transitive", r.vertex_transitive},
          {"spanning_cliques", r.spanning_cliques},
          {"not_rigid_minus_edge", r.not_rigid_minus_edge},
          {"not_globally_rigid", r.not_globally_rigid},
          {"structure", ToJson(r.structure)}};
}

json ToJson(const DependenceHypotheses& h) {
  return {{"min_degree", h.min_degree},
          {"no_clique_neighborhood", h.no_clique_neighborhood},
          {"clique_intersection", h.clique_intersection},
          {"all", h.all()}};
}

json ToJson(const DependenceProbe& p) {
  return {{"hypotheses", ToJson(p.hypotheses)},
          {"samples_tried", p.samples_tried},
          {"witness_found", p.witness.has_value()},
          {"witness_index", p.witness_index ? json(*p.witness_index) : json(nullptr)},
          {"witness_rank", p.witness ? json(p.witness_rank) : json(nullptr)},
          {"witness_edges", p.witness ? json(p.witness->graph.num_edges()) : json(nullptr)},
          {"witness", p.witness ? ToJson(*p.witness) : json(nullptr)}};
}

json ToJson(const PiSubgraph& ps) {
  json steps = json::array();
  for (const AttachStep& step : ps.steps) {
    steps.push_back({{"vertex", step.vertex},
                     {"case", static_cast<int>(step.attach_case)},
                     {"ordered_degree", step.ordered_degree},
                     {"chosen", step.chosen},
                     {"non_adjacent_pair", OptionalEdgeJson(step.non_adjacent_pair)}});
  }
  return {{"ordering", ps.ordering.sequence()}, {"steps", steps}};
}

PiSubgraph PiSubgraphFromJson(const json& j) {
  return Parse("pi-subgraph provenance", [&] {
    PiSubgraph ps;
    ps.ordering = Ordering(j.at("ordering").get<std::vector<int>>());
    std::vector<Edge> edges;
    for (const json& s : j.at("steps")) {
      AttachStep step;
      step.vertex = s.at("vertex").get<int>();
      const int c = s.at("case").get<int>();
      if (c < 1 || c > 3) throw InputError("attach case must be 1, 2 or 3");
      step.attach_case = static_cast<AttachCase>(c);
      step.ordered_degree = s.at("ordered_degree").get<int>();
      step.chosen = s.at("chosen").get<std::vector<int>>();
      step.non_adjacent_pair = OptionalEdgeFromJson(s.at("non_adjacent_pair"));
      for (int w : step.chosen) edges.emplace_back(step.vertex, w);
      ps.steps.push_back(std::move(step));
    }
    ps.graph = Graph(ps.ordering.size(), std::move(edges));
    return ps;
  });
}

json ToJson(const ConstructedGraph& c) {
  json out = {{"spec", FormatFamilySpec(c.spec)},
              {"n", c.graph.num_vertices()},
              {"m", c.graph.num_edges()}};
  if (!c.matching_rule.empty()) out["matching_rule"] = c.matching_rule;
  if (c.cliques) {
    out["clique_size"] = c.cliques->clique_size;
    out["copies"] = c.cliques->copies;
    out["loose_edges"] = EdgesJson(c.cliques->loose);
  }
  return out;
}

CliqueProvenance CliqueProvenanceFromJson(const json& j) {
  return Parse("provenance sidecar", [&] {
    CliqueProvenance p;
    p.clique_size = j.at("clique_size").get<int>();
    p.copies = j.at("copies").get<std::vector<std::vector<int>>>();
    for (const json& e : j.at("loose_edges")) p.loose.push_back(EdgeFromJson(e));
    return p;
  });
}

namespace {

void Flatten(const json& node, const std::string& prefix, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      Flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  out << prefix << ": ";
  if (node.is_string()) {
    out << node.get<std::string>();
  } else {
    out << node.dump();
  }
  out << '\n';
}

}  // namespace

std::string FormatText(const json& document) {
  std::ostringstream out;
  Flatten(document, "", out);
  return out.str();
}

}  // namespace vtrigid
