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

#include "commands.h"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vtrigid/connectivity.h"
#include "vtrigid/constructions.h"
#include "vtrigid/errors.h"
#include "vtrigid/global_rigidity.h"
#include "vtrigid/graph.h"
#include "vtrigid/pi_subgraph.h"
#include "vtrigid/rank_engine.h"
#include "vtrigid/reports.h"

namespace vtrigid::cli {
namespace {

using nlohmann::json;

void AddCommonOptions(CLI::App* cmd, RunConfig& config, std::string& format) {
  cmd->add_option("--dim", config.dimension, "Dimension d")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--seed", config.seed, "Master seed");
  cmd->add_option("--trials", config.trials, "Random realizations per rank query")
      ->check(CLI::Range(1, 1000));
  cmd->add_option("--retries", config.retries, "Stress certificate attempts")
      ->check(CLI::Range(1, 1000));
  cmd->add_option("--budget", config.pi_budget, "Pi-subgraph sample budget")
      ->check(CLI::Range(1, 100'000'000));
  cmd->add_option("--node-budget", config.node_budget,
                  "Automorphism search node budget")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--clique-limit", config.clique_limit,
                  "Maximal clique enumeration limit")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}));
  cmd->add_option("--out", config.out_path, "Output path");
}

AutomorphismOptions AutomorphismConfig(const RunConfig& config) {
  AutomorphismOptions options;
  options.node_budget = config.node_budget;
  return options;
}

GlobalRigidityOptions GlobalConfig(const RunConfig& config) {
  GlobalRigidityOptions options;
  options.rank = {config.trials, config.seed};
  options.retries = config.retries;
  options.seed = config.seed;
  return options;
}

json ConfigJson(const RunConfig& config) {
  return {{"d", config.dimension},     {"seed", config.seed},
          {"trials", config.trials},   {"retries", config.retries},
          {"budget", config.pi_budget}};
}

const char* YesNo(bool b) { return b ? "yes" : "no"; }

std::string VerdictWord(GlobalStatus status) {
  switch (status) {
    case GlobalStatus::kCertifiedGloballyRigid:
      return "certified";
    case GlobalStatus::kCertifiedNotGloballyRigid:
      return "certified_not";
    case GlobalStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

void Emit(const json& document, const RunConfig& config, bool to_file,
          std::ostream& out) {
  const std::string body =
      config.structured ? document.dump(2) + "\n" : FormatText(document);
  if (to_file && !config.out_path.empty()) {
    std::ofstream file(config.out_path);
    if (!file) throw InputError("cannot write '" + config.out_path + "'");
    file << body;
  } else {
    out << body;
  }
}

int Analyze(const std::string& path, const RunConfig& config, std::ostream& out) {
  const Graph graph = ReadEdgeListFile(path);
  const int d = config.dimension;
  const RankOptions rank_options{config.trials, config.seed};

  json doc;
  doc["command"] = "analyze";
  doc["input"] = path;
  doc["config"] = ConfigJson(config);
  const auto regular = graph.RegularDegree();
  doc["graph"] = {{"n", graph.num_vertices()},
                  {"m", graph.num_edges()},
                  {"connected", IsConnected(graph)},
                  {"components", NumConnectedComponents(graph)},
                  {"regular_degree", regular ? json(*regular) : json(nullptr)}};
  const RankReport rank = AnalyzeRank(graph, d, rank_options);
  doc["rank"] = ToJson(rank);
  const RedundancyReport redundancy = AnalyzeRedundantRigidity(graph, d, rank_options);
  doc["redundancy"] = ToJson(redundancy);
  if (graph.num_vertices() >= 2) {
    const VertexCut cut = MinimumVertexCut(graph);
    doc["connectivity"] = {{"kappa", cut.connectivity}, {"separator", cut.separator}};
  }
  const MainTheoremReport theorem =
      MainTheoremProbe(graph, d, GlobalConfig(config), AutomorphismConfig(config));
  doc["global_rigidity"] = ToJson(theorem.verdict);
  json theorem_json = ToJson(theorem);
  theorem_json.erase("verdict");
  doc["main_theorem"] = theorem_json;
  doc["summary"] = {{"rigid", YesNo(rank.rigid)},
                    {"redundantly_rigid", YesNo(redundancy.redundantly_rigid)},
                    {"globally_rigid", VerdictWord(theorem.verdict.status)}};
  Emit(doc, config, true, out);
  return kExitOk;
}

int Construct(const std::vector<std::string>& tokens, const RunConfig& config,
              std::ostream& out) {
  const FamilySpec spec = ParseFamilySpec(tokens);
  const ConstructedGraph built = Construct(spec, AutomorphismConfig(config));
  json doc = ToJson(built);
  doc["command"] = "construct";
  const auto regular = built.graph.RegularDegree();
  doc["regular_degree"] = regular ? json(*regular) : json(nullptr);
  doc["vertex_transitive"] =
      built.graph.num_vertices() >= 1 &&
      IsVertexTransitive(built.graph, AutomorphismConfig(config));
  doc["connected"] = IsConnected(built.graph);
  doc.erase("copies");
  doc.erase("loose_edges");
  if (!config.out_path.empty()) {
    std::ofstream edges(config.out_path);
    if (!edges) throw InputError("cannot write '" + config.out_path + "'");
    WriteEdgeList(edges, built.graph);
    const std::string sidecar = config.out_path + ".provenance.json";
    std::ofstream side(sidecar);
    if (!side) throw InputError("cannot write '" + sidecar + "'");
    side << ToJson(built).dump(2) << '\n';
    doc["edge_list"] = config.out_path;
    doc["provenance"] = sidecar;
  }
  RunConfig to_stdout = config;
  to_stdout.out_path.clear();
  Emit(doc, to_stdout, false, out);
  return kExitOk;
}

int ProbePi(const std::string& path, const RunConfig& config, std::ostream& out) {
  const Graph graph = ReadEdgeListFile(path);
  const DependenceProbe probe =
      FindDependentPiSubgraph(graph, config.dimension, config.pi_budget, config.seed,
                              {config.trials, config.seed}, config.clique_limit);
  json doc;
  doc["command"] = "probe-pi";
  doc["input"] = path;
  doc["config"] = ConfigJson(config);
  doc["graph"] = {{"n", graph.num_vertices()}, {"m", graph.num_edges()}};
  doc["probe"] = ToJson(probe);
  Emit(doc, config, true, out);
  return kExitOk;
}

int VerifyTightnessCommand(const RunConfig& config, std::string& stage,
                           std::ostream& out) {
  const int d = config.dimension;
  if (d < 2) throw InputError("verify-tightness needs --dim >= 2");
  stage = "construct";
  FamilySpec spec;
  spec.kind = FamilyKind::kTightCounterexample;
  spec.d = d;
  const ConstructedGraph built = Construct(spec, AutomorphismConfig(config));
  stage = "bound";
  const TightnessReport tightness =
      VerifyTightness(built.graph, *built.cliques, d, {config.trials, config.seed},
                      AutomorphismConfig(config));
  stage = "verdict";
  const GlobalRigidityVerdict verdict =
      DecideGlobalRigidity(built.graph, d, GlobalConfig(config));
  if (tightness.not_globally_rigid !=
      (verdict.status == GlobalStatus::kCertifiedNotGloballyRigid)) {
    throw PropertyViolation("tightness chain and Hendrickson verdict disagree");
  }
  json doc;
  doc["command"] = "verify-tightness";
  doc["config"] = ConfigJson(config);
  json construction = ToJson(built);
  construction.erase("copies");
  construction.erase("loose_edges");
  doc["construction"] = construction;
  doc["tightness"] = ToJson(tightness);
  doc["global_rigidity"] = ToJson(verdict);
  doc["summary"] = {
      {"bound", tightness.partition_bound},
      {"full_rank", tightness.full_rank},
      {"rank_without_edge", tightness.rank_without_edge},
      {"globally_rigid", VerdictWord(verdict.status)}};
  stage.clear();
  Emit(doc, config, true, out);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial rigidity toolkit for vertex-transitive graphs", "vtrigid"};
  app.require_subcommand(1);
  RunConfig config;
  std::string format = "text";
  std::string path;
  std::vector<std::string> spec_tokens;

  CLI::App* analyze = app.add_subcommand("analyze", "Rigidity, redundancy and global rigidity of an edge list");
  analyze->add_option("path", path, "Edge-list file")->required();
  AddCommonOptions(analyze, config, format);

  CLI::App* construct = app.add_subcommand("construct", "Build a graph family member");
  construct->add_option("spec", spec_tokens, "Family spec, e.g. circulant n=13 s=1,2,3")
      ->required();
  AddCommonOptions(construct, config, format);

  CLI::App* probe = app.add_subcommand("probe-pi", "Search for a dependent ordering-induced subgraph");
  probe->add_option("path", path, "Edge-list file")->required();
  AddCommonOptions(probe, config, format);

  CLI::App* tightness = app.add_subcommand("verify-tightness", "Construct and verify the degree d(d+1)-1 counterexample");
  AddCommonOptions(tightness, config, format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, err);
    return code == 0 ? kExitOk : kExitInput;
  }
  config.structured = format == "structured";

  std::string stage;
  try {
    if (analyze->parsed()) return Analyze(path, config, out);
    if (construct->parsed()) return Construct(spec_tokens, config, out);
    if (probe->parsed()) return ProbePi(path, config, out);
    if (tightness->parsed()) return VerifyTightnessCommand(config, stage, out);
  } catch (const Error& e) {
    err << "error (" << ErrorKindName(e.kind()) << ")";
    if (!stage.empty()) err << " at stage " << stage;
    err << ": " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitInput;
}

}  // namespace vtrigid::cli
