// Copyright 2026 The Pathcause Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pathcause: learn constraint chains from path-selection demonstrations and
// plan, explain and evaluate routes with them.
//
//   pathcause gen  --topology t1.json --policy shortest --n 20 --seed 7
//   pathcause mine --corpus corpus.json --tau 0.6
//   pathcause plan --topology t2.json --library lib.json
//                  --intent "FIND PATH FROM A TO D"
//   pathcause eval --topology t2.json --structure structure.json
//                  --intent "FIND PATH FROM A TO D"
//
// Exit codes: 0 success, 2 validation or input error, 3 internal error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "pathcause/demonstrations.h"
#include "pathcause/error.h"
#include "pathcause/executor.h"
#include "pathcause/explain.h"
#include "pathcause/flow_rules.h"
#include "pathcause/instantiate.h"
#include "pathcause/intent.h"
#include "pathcause/miner.h"
#include "pathcause/oracle.h"
#include "pathcause/structure.h"
#include "pathcause/topology_io.h"
#include "run_config.h"

namespace pathcause::tools {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

// Flag values land here; only flags actually given override the config.
struct Overrides {
  int max_hops = 0;
  double tau = 0.6;
  double smoothing = 1.0;
  double prior_feasibility = 4.0;
  double prior_scope = 2.0;
  int discards = 10;
  std::uint64_t ceiling = kDefaultCandidateCeiling;
  std::int64_t seed = 0;
  std::string output_dir;

  CLI::Option* max_hops_opt = nullptr;
  CLI::Option* tau_opt = nullptr;
  CLI::Option* smoothing_opt = nullptr;
  CLI::Option* prior_feasibility_opt = nullptr;
  CLI::Option* prior_scope_opt = nullptr;
  CLI::Option* discards_opt = nullptr;
  CLI::Option* ceiling_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* output_dir_opt = nullptr;

  void Apply(RunConfig& c) const {
    auto given = [](CLI::Option* o) { return o != nullptr && o->count() > 0; };
    if (given(max_hops_opt)) c.max_hops = max_hops;
    if (given(tau_opt)) c.tau = tau;
    if (given(smoothing_opt)) c.smoothing = smoothing;
    if (given(prior_feasibility_opt)) {
      c.prior.feasibility_first_weight = prior_feasibility;
    }
    if (given(prior_scope_opt)) c.prior.scope_order_weight = prior_scope;
    if (given(discards_opt)) c.discard_sample_size = discards;
    if (given(ceiling_opt)) c.candidate_ceiling = ceiling;
    if (given(seed_opt)) c.seed = seed;
    if (given(output_dir_opt)) c.output_dir = output_dir;
  }
};

void AddCommonFlags(CLI::App* cmd, Overrides& o) {
  o.max_hops_opt = cmd->add_option("--max-hops", o.max_hops,
                                   "Hop bound for enumeration (0: |nodes|-1)");
  o.ceiling_opt = cmd->add_option("--ceiling", o.ceiling,
                                  "Maximum number of enumerated candidates");
}

// Writes to `path`, or stdout when it is empty or "-".
void Emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    WriteTextFile(path, contents);
  }
}

std::string JoinDir(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

struct GenArgs {
  std::string topology;
  std::string policy = "shortest";
  std::string via;
  int n = 20;
  std::string out;
};

int RunGen(const GenArgs& a, const RunConfig& config) {
  Topology t = ParseTopology(ReadTextFile(a.topology));
  PolicySpec policy;
  if (a.policy == "via") {
    if (a.via.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "--policy via needs --via");
    }
    policy.via = NodeId(a.via);
  } else if (a.policy != "shortest") {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown policy '" + a.policy + "'");
  }
  policy.max_hops = config.max_hops;
  policy.discard_sample_size = config.discard_sample_size;
  policy.candidate_ceiling = config.candidate_ceiling;
  DemonstrationSet ds = GenerateDemonstrations(t, policy, a.n, config.seed);
  Emit(a.out, SerializeDemonstrations(ds, config.ToJson()));
  return kExitOk;
}

struct MineArgs {
  std::string corpus;
  std::string out;
};

int RunMine(const MineArgs& a, const RunConfig& config) {
  DemonstrationSet ds = ParseDemonstrations(ReadTextFile(a.corpus));
  auto library = Mine(ds, config.tau, config.smoothing);
  if (library.empty()) {
    std::cerr << "warning: no constraint reached tau = " << config.tau
              << "; the library is empty\n";
  }
  Emit(a.out, SerializeLibrary(library, config.ToJson()));
  return kExitOk;
}

// A saved chain is bound to the endpoints it was learned for.
void CheckStructureMatchesIntent(const CausalKnowledgeStructure& structure,
                                 const Intent& intent) {
  for (const ConstraintInstance& c : structure.chain) {
    if (c.tmpl.kind() != ConstraintKind::kEndpoints) continue;
    if (c.bindings.at("start") != intent.start ||
        c.bindings.at("dest") != intent.dest) {
      throw Error(ErrorCode::kInvalidArgument,
                  "structure is bound to " + c.ToString() +
                      ", which does not match the intent");
    }
  }
}

struct PlanArgs {
  std::string topology;
  std::string library;
  std::string structure;
  std::string intent;
  std::string format = "text";
};

CausalKnowledgeStructure LearnStructure(const Intent& intent,
                                        const std::string& library_path,
                                        const RunConfig& config) {
  auto library = ParseLibrary(ReadTextFile(library_path));
  Instantiation inst = Instantiate(intent, library);
  for (const std::string& u : inst.unmapped) {
    std::cerr << "warning: library has no template for " << u
              << "; it is not enforced\n";
  }
  auto posterior = PosteriorOverArrangements(inst.instances, config.prior);
  return MapStructure(posterior, config.prior);
}

int RunPlan(const PlanArgs& a, const RunConfig& config) {
  if (a.library.empty() == a.structure.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --library or --structure");
  }
  if (a.format != "text" && a.format != "machine") {
    throw Error(ErrorCode::kInvalidArgument, "--format is text or machine");
  }
  Topology t = ParseTopology(ReadTextFile(a.topology));
  Intent intent = ParseIntent(a.intent);
  CausalKnowledgeStructure structure =
      a.structure.empty() ? LearnStructure(intent, a.library, config)
                          : ParseStructure(ReadTextFile(a.structure));
  CheckStructureMatchesIntent(structure, intent);

  ExecutionTrace trace = Execute(structure, t, intent, config.LimitsFor(t));
  Explanation explanation = Explain(trace, t);
  const std::string cfg = config.ToJson();

  std::filesystem::create_directories(config.output_dir);
  WriteTextFile(JoinDir(config.output_dir, "structure.json"),
                SerializeStructure(structure, cfg));
  std::vector<FlowRule> rules;
  if (trace.final.empty()) {
    std::cerr << "warning: no path survived the structure; no flow rules\n";
  } else {
    if (trace.final.size() > 1) {
      std::cerr << "note: " << trace.final.size()
                << " equally good paths; flow rules follow the first\n";
    }
    rules = ExportFlowRules(*trace.final.begin(), t, intent);
  }
  WriteTextFile(JoinDir(config.output_dir, "flow_rules.json"),
                SerializeFlowRules(rules, cfg));

  if (a.format == "machine") {
    std::cout << RenderMachine(explanation, cfg);
  } else {
    std::cout << "# run_config " << cfg << "\n" << RenderText(explanation);
  }
  return kExitOk;
}

struct EvalArgs {
  std::string topology;
  std::string structure;
  std::string intent;
  std::string intents_file;
  std::string out;
};

std::string EvalOne(const CausalKnowledgeStructure& structure,
                    const Topology& t, const Intent& intent,
                    const RunConfig& config) {
  CheckStructureMatchesIntent(structure, intent);
  EnumerationLimits limits = config.LimitsFor(t);
  ExecutionTrace trace = Execute(structure, t, intent, limits);
  PathSet target = OracleTargetSpace(t, intent, limits);
  return MetricsCsv(ComputeMetrics(trace, target), config.ToJson());
}

int RunEval(const EvalArgs& a, const RunConfig& config) {
  if (a.intent.empty() == a.intents_file.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "give exactly one of --intent or --intents");
  }
  Topology t = ParseTopology(ReadTextFile(a.topology));
  CausalKnowledgeStructure structure =
      ParseStructure(ReadTextFile(a.structure));
  if (!a.intent.empty()) {
    Emit(a.out, EvalOne(structure, t, ParseIntent(a.intent), config));
    return kExitOk;
  }
  // Batch mode: one CSV block per intent, each headed by its intent line.
  std::string all;
  for (const Intent& intent : ParseIntentBatch(ReadTextFile(a.intents_file))) {
    all += "# intent " + RenderIntent(intent) + "\n";
    all += EvalOne(structure, t, intent, config);
  }
  Emit(a.out, all);
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Learn, execute and explain constraint chains for path "
               "selection."};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON run-config file")
      ->check(CLI::ExistingFile);

  Overrides o;
  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate a demonstration corpus");
  gen->add_option("--topology", gen_args.topology, "Topology file")
      ->required()
      ->check(CLI::ExistingFile);
  gen->add_option("--policy", gen_args.policy, "shortest | via");
  gen->add_option("--via", gen_args.via, "Fixed node for --policy via");
  gen->add_option("--n", gen_args.n, "Number of records");
  o.seed_opt = gen->add_option("--seed", o.seed, "Generator seed");
  o.discards_opt =
      gen->add_option("--discards", o.discards, "Discards sampled per record");
  gen->add_option("--out", gen_args.out, "Output corpus file (default stdout)");
  AddCommonFlags(gen, o);

  MineArgs mine_args;
  auto* mine = app.add_subcommand("mine", "Mine a template library");
  mine->add_option("--corpus", mine_args.corpus, "Corpus file")
      ->required()
      ->check(CLI::ExistingFile);
  o.tau_opt = mine->add_option("--tau", o.tau, "Score threshold in (0,1)");
  o.smoothing_opt =
      mine->add_option("--smoothing", o.smoothing, "Laplace smoothing");
  mine->add_option("--out", mine_args.out, "Output library (default stdout)");

  PlanArgs plan_args;
  auto* plan = app.add_subcommand("plan", "Plan and explain a path");
  plan->add_option("--topology", plan_args.topology, "Topology file")
      ->required()
      ->check(CLI::ExistingFile);
  plan->add_option("--library", plan_args.library, "Template library")
      ->check(CLI::ExistingFile);
  plan->add_option("--structure", plan_args.structure,
                   "Saved structure; skips learning")
      ->check(CLI::ExistingFile);
  plan->add_option("--intent", plan_args.intent, "Intent text")->required();
  plan->add_option("--format", plan_args.format, "text | machine");
  o.prior_feasibility_opt = plan->add_option(
      "--prior-feasibility", o.prior_feasibility, "Feasibility-first weight");
  o.prior_scope_opt =
      plan->add_option("--prior-scope", o.prior_scope, "Scope-order weight");
  o.output_dir_opt = plan->add_option("--out-dir", o.output_dir,
                                      "Directory for structure and flow rules");
  AddCommonFlags(plan, o);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Per-step P/R against the oracle");
  eval->add_option("--topology", eval_args.topology, "Topology file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--structure", eval_args.structure, "Structure file")
      ->required()
      ->check(CLI::ExistingFile);
  eval->add_option("--intent", eval_args.intent, "Intent text");
  eval->add_option("--intents", eval_args.intents_file,
                   "File with one intent per line ('#' comments)")
      ->check(CLI::ExistingFile);
  eval->add_option("--out", eval_args.out, "Metrics CSV (default stdout)");
  // Options belong to one subcommand each in CLI11, so eval gets its own
  // enumeration flags bound to the same storage.
  auto* eval_hops = eval->add_option("--max-hops", o.max_hops, "Hop bound");
  auto* eval_ceiling = eval->add_option("--ceiling", o.ceiling, "Ceiling");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (eval->parsed()) {
    o.max_hops_opt = eval_hops;
    o.ceiling_opt = eval_ceiling;
  }

  try {
    RunConfig config;
    if (!config_path.empty()) config.MergeJson(ReadTextFile(config_path));
    o.Apply(config);
    config.Validate();

    if (gen->parsed()) return RunGen(gen_args, config);
    if (mine->parsed()) return RunMine(mine_args, config);
    if (plan->parsed()) return RunPlan(plan_args, config);
    return RunEval(eval_args, config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace
}  // namespace pathcause::tools

int main(int argc, char** argv) { return pathcause::tools::Main(argc, argv); }
