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

#include "pathcause/executor.h"

#include <sstream>

#include "json_util.h"
#include "pathcause/error.h"

namespace pathcause {

ExecutionTrace Execute(const CausalKnowledgeStructure& structure,
                       const Topology& t, const Intent& intent,
                       const EnumerationLimits& limits) {
  for (const NodeId* n : {&intent.start, &intent.dest}) {
    if (!t.HasNode(*n)) {
      throw Error(ErrorCode::kUnboundEntity,
                  "intent names '" + n->str() + "', absent from topology '" +
                      t.label() + "'");
    }
  }
  for (const auto& c : structure.chain) {
    for (const auto& [ph, node] : c.bindings) {
      if (!t.HasNode(node)) {
        throw Error(ErrorCode::kUnboundEntity,
                    c.ToString() + " binds '" + node.str() +
                        "', absent from topology '" + t.label() + "'");
      }
    }
  }

  ExecutionTrace trace;
  trace.topology_label = t.label();
  trace.intent = intent;
  trace.structure = structure;
  trace.solution_space =
      EnumerateSolutionSpace(t, {intent.start, intent.dest}, limits);
  if (trace.solution_space.empty()) {
    throw Error(ErrorCode::kEmptySolutionSpace, RenderIntent(intent));
  }

  const PathSet* current = &trace.solution_space;
  trace.steps.reserve(structure.chain.size());
  for (std::size_t i = 0; i < structure.chain.size(); ++i) {
    FilterStep step;
    step.index = i;
    step.instance = structure.chain[i];
    step.before = *current;
    if (step.instance.tmpl.kind() == ConstraintKind::kShortest) {
      step.shortest_reference = MinConnectedWeight(t, step.before);
    }
    for (const Path& p : step.before) {
      if (auto reason =
              CheckConstraint(step.instance, t, p, step.shortest_reference)) {
        step.eliminated.push_back({p, std::move(*reason)});
      } else {
        step.survivors.Append(p);
      }
    }
    trace.steps.push_back(std::move(step));
    current = &trace.steps.back().survivors;
  }
  trace.final = *current;
  return trace;
}

std::vector<std::string> AuditTrace(const ExecutionTrace& trace,
                                    const Topology& t) {
  std::vector<std::string> problems;
  const PathSet* expected_before = &trace.solution_space;
  for (const FilterStep& step : trace.steps) {
    const std::string where = "step " + std::to_string(step.index) + " (" +
                              step.instance.ToString() + ")";
    if (!(step.before == *expected_before)) {
      problems.push_back(where + ": input differs from previous survivors");
    }
    if (step.survivors.size() + step.eliminated.size() != step.before.size()) {
      problems.push_back(where + ": survivors and eliminations do not "
                                 "partition the input");
    }
    if (step.survivors.size() > step.before.size()) {
      problems.push_back(where + ": subspace grew");
    }
    std::optional<Rational> reference;
    if (step.instance.tmpl.kind() == ConstraintKind::kShortest) {
      reference = MinConnectedWeight(t, step.before);
    }
    for (const Elimination& e : step.eliminated) {
      if (!step.before.Contains(e.path) || step.survivors.Contains(e.path)) {
        problems.push_back(where + ": " + e.path.ToString() +
                           " eliminated but not a proper input");
      }
      if (Satisfies(step.instance, t, e.path, reference)) {
        problems.push_back(where + ": " + e.path.ToString() +
                           " eliminated although it satisfies the constraint");
      }
    }
    for (const Path& p : step.survivors) {
      if (!Satisfies(step.instance, t, p, reference)) {
        problems.push_back(where + ": " + p.ToString() +
                           " survived although it violates the constraint");
      }
    }
    expected_before = &step.survivors;
  }
  if (!(trace.final == *expected_before)) {
    problems.push_back("final set differs from the last survivors");
  }
  return problems;
}

std::vector<StepMetrics> ComputeMetrics(const ExecutionTrace& trace,
                                        const PathSet& target) {
  if (target.empty()) {
    throw Error(ErrorCode::kEmptyTarget, "no path satisfies the intent");
  }
  auto row = [&](std::size_t index, std::string name, const PathSet& subspace) {
    StepMetrics m;
    m.index = index;
    m.constraint = std::move(name);
    m.subspace_size = subspace.size();
    const auto hits = static_cast<std::int64_t>(subspace.IntersectionSize(target));
    m.precision = subspace.empty()
                      ? Rational(0)
                      : Rational(hits, static_cast<std::int64_t>(subspace.size()));
    m.recall = Rational(hits, static_cast<std::int64_t>(target.size()));
    return m;
  };
  std::vector<StepMetrics> out;
  if (trace.steps.empty()) {
    out.push_back(row(0, "none", trace.solution_space));
    return out;
  }
  for (const FilterStep& step : trace.steps) {
    out.push_back(row(step.index, step.instance.ToString(), step.survivors));
  }
  return out;
}

std::string MetricsCsv(const std::vector<StepMetrics>& metrics,
                       std::string_view run_config_json) {
  std::ostringstream out;
  if (!run_config_json.empty()) {
    out << "# run_config "
        << internal::ParseJson(run_config_json, "run_config").dump() << "\n";
  }
  out << "step,constraint,subspace_size,P,R\n";
  for (const StepMetrics& m : metrics) {
    // Constraint labels contain commas between bindings.
    std::string name = m.constraint;
    if (name.find(',') != std::string::npos) name = "\"" + name + "\"";
    out << m.index << ',' << name << ',' << m.subspace_size << ','
        << m.precision.ToExactDecimal() << ',' << m.recall.ToExactDecimal()
        << "\n";
  }
  return out.str();
}

}  // namespace pathcause
