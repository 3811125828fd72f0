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

#include "pathcause/belief_update.h"

#include <algorithm>

#include "pathcause/error.h"

namespace pathcause {

BeliefState UpdateBeliefs(const BeliefState& state,
                          const CausalKnowledgeStructure& structure,
                          const ExecutionTrace& trace, const PathSet& target,
                          const BeliefUpdateConfig& config) {
  if (target.empty()) throw Error(ErrorCode::kEmptyTarget, "belief update");
  if (trace.steps.size() != structure.chain.size()) {
    throw Error(ErrorCode::kTraceMismatch, "step count differs from chain");
  }
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (!trace.steps[i].instance.SameConstraint(structure.chain[i])) {
      throw Error(ErrorCode::kTraceMismatch,
                  "step " + std::to_string(i) + " ran " +
                      trace.steps[i].instance.ToString() + ", chain has " +
                      structure.chain[i].ToString());
    }
  }

  BeliefState next = state;
  for (const FilterStep& step : trace.steps) {
    auto it = std::find_if(next.library.begin(), next.library.end(),
                           [&](const LikelihoodModel& m) {
                             return m.tmpl == step.instance.tmpl;
                           });
    if (it == next.library.end()) continue;
    const auto kept = static_cast<std::int64_t>(
        step.survivors.IntersectionSize(target));
    std::int64_t wrongly_dropped = 0;
    for (const Elimination& e : step.eliminated) {
      if (target.Contains(e.path)) ++wrongly_dropped;
    }
    it->sel_sat += kept;
    it->sel_tot += kept;
    it->dis_sat += wrongly_dropped;
    it->dis_tot += wrongly_dropped;
  }

  const bool full_recall = trace.final.IntersectionSize(target) == target.size();
  double& w = next.prior.feasibility_first_weight;
  w = full_recall ? std::min(w * config.growth, config.cap) : w * config.decay;
  return next;
}

}  // namespace pathcause
