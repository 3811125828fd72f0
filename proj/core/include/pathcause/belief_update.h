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

#ifndef PATHCAUSE_BELIEF_UPDATE_H_
#define PATHCAUSE_BELIEF_UPDATE_H_

#include <vector>

#include "pathcause/executor.h"
#include "pathcause/miner.h"
#include "pathcause/structure.h"

namespace pathcause {

struct BeliefState {
  std::vector<LikelihoodModel> library;
  ArrangementPrior prior;
};

struct BeliefUpdateConfig {
  double decay = 0.9;
  double growth = 1.05;
  double cap = 10.0;
};

// Feeds an evaluated trace back into the beliefs. Per step, target paths
// that survived count as satisfied selections and target paths the step
// eliminated count as satisfied discards (the constraint is doubted). The
// feasibility-first weight decays when final recall is below 1 and grows
// (capped) otherwise. Single writer: callers serialize updates.
// Errors: kTraceMismatch when the trace was not produced by `structure`,
// kEmptyTarget.
BeliefState UpdateBeliefs(const BeliefState& state,
                          const CausalKnowledgeStructure& structure,
                          const ExecutionTrace& trace, const PathSet& target,
                          const BeliefUpdateConfig& config = {});

}  // namespace pathcause

#endif  // PATHCAUSE_BELIEF_UPDATE_H_
