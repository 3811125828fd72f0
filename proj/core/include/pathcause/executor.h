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

// Stepwise execution of a causal knowledge structure: each instance filters
// the surviving candidates, and every elimination records why.

#ifndef PATHCAUSE_EXECUTOR_H_
#define PATHCAUSE_EXECUTOR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/constraints.h"
#include "pathcause/graph.h"
#include "pathcause/intent.h"
#include "pathcause/rational.h"
#include "pathcause/structure.h"

namespace pathcause {

struct Elimination {
  Path path;
  std::string reason;

  bool operator==(const Elimination&) const = default;
};

struct FilterStep {
  std::size_t index = 0;
  ConstraintInstance instance;
  PathSet before;
  PathSet survivors;
  // In `before` order.
  std::vector<Elimination> eliminated;
  // Minimal connected weight of `before`; set for Shortest steps only.
  std::optional<Rational> shortest_reference;
};

struct ExecutionTrace {
  std::string topology_label;
  Intent intent;
  CausalKnowledgeStructure structure;
  PathSet solution_space;
  std::vector<FilterStep> steps;
  PathSet final;
};

// Enumerates the intent's solution space and applies the chain in order.
// Shortest keeps every minimal-weight connected survivor. Errors:
// kUnboundEntity (a binding or intent endpoint missing from t),
// kEmptySolutionSpace, plus EnumerateSolutionSpace's errors.
ExecutionTrace Execute(const CausalKnowledgeStructure& structure,
                       const Topology& t, const Intent& intent,
                       const EnumerationLimits& limits);

// Re-checks every recorded elimination against its step's predicate and
// the trace's structural invariants. Returns one message per problem.
std::vector<std::string> AuditTrace(const ExecutionTrace& trace,
                                    const Topology& t);

struct StepMetrics {
  std::size_t index = 0;
  std::string constraint;
  std::size_t subspace_size = 0;
  // |survivors & target| / |survivors|, 0 for an empty subspace.
  Rational precision;
  // |survivors & target| / |target|.
  Rational recall;
};

// One row per step; a trace without steps yields a single row for the
// unfiltered solution space. Errors: kEmptyTarget.
std::vector<StepMetrics> ComputeMetrics(const ExecutionTrace& trace,
                                        const PathSet& target);

// "step,constraint,subspace_size,P,R" with exact decimal (or fraction)
// values. A non-empty run config is written first as a '#' comment line.
std::string MetricsCsv(const std::vector<StepMetrics>& metrics,
                       std::string_view run_config_json = {});

}  // namespace pathcause

#endif  // PATHCAUSE_EXECUTOR_H_
