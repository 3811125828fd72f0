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

// Posterior over linear arrangements of constraint instances.
//
// An arrangement's unnormalized mass is
//
//   exp(wf * f + ws * g) * prod_i score_i ^ (1 / (i + 1))
//
// where f = 1 when every feasibility instance precedes every optimization
// instance, and g is the fraction of adjacent local/global pairs (scope
// point or adjacent next to scope global) that put the local one first.
// Earlier positions weigh their likelihood more, so the chain reads from
// high to low priority.

#ifndef PATHCAUSE_STRUCTURE_H_
#define PATHCAUSE_STRUCTURE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/constraints.h"

namespace pathcause {

struct ArrangementPrior {
  double feasibility_first_weight = 4.0;
  double scope_order_weight = 2.0;

  // Errors: kInvalidArgument unless both weights are > 0.
  void Validate() const;
  bool operator==(const ArrangementPrior&) const = default;
};

using Arrangement = std::vector<ConstraintInstance>;

struct PriorComponents {
  bool feasibility_first = false;
  double scope_order = 0.0;
  double log_prior = 0.0;
};

PriorComponents EvaluatePrior(const Arrangement& chain,
                              const ArrangementPrior& prior);

// sum_i log(score_i) / (i + 1). Scores must be > 0.
double PositionalLogLikelihood(const Arrangement& chain);

struct PosteriorEntry {
  Arrangement chain;
  double probability = 0.0;
  double log_mass = 0.0;
  PriorComponents prior;
};

inline constexpr std::size_t kMaxArrangementInstances = 8;

// Every permutation of `instances` with its normalized probability. Errors:
// kInvalidArgument (empty bag, non-positive score), kTooManyInstances
// (more than kMaxArrangementInstances).
std::vector<PosteriorEntry> PosteriorOverArrangements(
    const std::vector<ConstraintInstance>& instances,
    const ArrangementPrior& prior);

struct CausalKnowledgeStructure {
  Arrangement chain;
  double posterior = 0.0;
  PriorComponents prior;
  ArrangementPrior prior_weights;

  std::string ChainString() const;  // "Connectivity -> LoopFree -> ..."
};

// Relative tolerance under which two probabilities count as tied.
inline constexpr double kTieTolerance = 1e-12;

// Argmax with ties broken by higher summed instance score, then the
// lexicographically smaller sequence of kind labels, then bindings.
// Independent of the input order. Errors: kInvalidArgument when empty.
CausalKnowledgeStructure MapStructure(
    const std::vector<PosteriorEntry>& posterior,
    const ArrangementPrior& prior = {});

// Structure document: chain of {kind, bindings, score}, posterior and the
// prior provenance; "run_config" is embedded when given.
std::string SerializeStructure(const CausalKnowledgeStructure& s,
                               std::string_view run_config_json = {});
CausalKnowledgeStructure ParseStructure(std::string_view document);

}  // namespace pathcause

#endif  // PATHCAUSE_STRUCTURE_H_
