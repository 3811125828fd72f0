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

// Constraint mining: phenomenon detectors over a demonstration corpus and
// a count-based likelihood per template.

#ifndef PATHCAUSE_MINER_H_
#define PATHCAUSE_MINER_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/constraints.h"
#include "pathcause/demonstrations.h"

namespace pathcause {

// Smoothed selected-vs-discarded contrast for one template:
//   p_sel = (sel_sat + s) / (sel_tot + 2s),  p_dis likewise,
//   score = p_sel * (1 - p_dis).
struct LikelihoodModel {
  ConstraintTemplate tmpl{ConstraintKind::kConnectivity};
  std::int64_t sel_sat = 0;
  std::int64_t sel_tot = 0;
  std::int64_t dis_sat = 0;
  std::int64_t dis_tot = 0;
  double smoothing = 1.0;

  double p_sel() const;
  double p_dis() const;
  double score() const { return p_sel() * (1.0 - p_dis()); }

  bool operator==(const LikelihoodModel&) const = default;
};

// One witnessing record for a phenomenon, with the bindings it suggests
// (the node for FixedNode, the endpoint pair for Endpoints, else none).
struct Evidence {
  std::size_t record = 0;
  std::map<std::string, NodeId> bindings;

  bool operator==(const Evidence&) const = default;
};

struct PhenomenonCandidate {
  ConstraintTemplate tmpl{ConstraintKind::kConnectivity};
  std::vector<Evidence> evidence;

  // Distinct records among the evidence.
  std::size_t RecordCount() const;
};

struct PhenomenonReport {
  std::vector<PhenomenonCandidate> candidates;

  const PhenomenonCandidate* Find(ConstraintKind kind) const;
  void Merge(PhenomenonReport other);
};

// FixedNode: nodes (other than the record's endpoints) on every selected
// path while missing from at least one discard. One evidence entry per
// (record, node); no candidate when nothing qualifies.
PhenomenonReport DetectPointPhenomena(const DemonstrationSet& ds);

// Connectivity: records whose selected paths are all connected while some
// discard is not. The candidate is always emitted.
PhenomenonReport DetectAdjacentPhenomena(const DemonstrationSet& ds);

// LoopFree, Shortest and Endpoints, always emitted.
//  - LoopFree: all selected simple, some discard not.
//  - Shortest: every selected path connected and of minimal weight among
//    the record's connected simple paths with the same endpoints, and some
//    such discard strictly heavier.
//  - Endpoints: selected paths share one endpoint pair, some discard not.
PhenomenonReport DetectGlobalPhenomena(const DemonstrationSet& ds);

// The per-record instantiation a template receives during estimation.
struct RecordBinding {
  std::map<std::string, NodeId> bindings;
  std::optional<Rational> shortest_reference;
};

// Common (first, last) of the record's selected paths, if they agree.
std::optional<std::pair<NodeId, NodeId>> RecordEndpoints(
    const PracticeRecord& r);

// Binds `kind` on one record, or nullopt when the record offers no binding.
//  - Endpoints: the common selected endpoints.
//  - FixedNode: the qualifying node missing from the most discards, ties to
//    the smallest name.
//  - Shortest: reference weight = minimum over the record's connected simple
//    paths between its endpoints.
std::optional<RecordBinding> BindOnRecord(ConstraintKind kind,
                                          const DemonstrationSet& ds,
                                          std::size_t record);

// Counts per-record satisfaction over every selected and discarded path.
// Records without a binding are skipped. Errors: kNoApplicableRecords,
// kInvalidArgument (smoothing <= 0).
LikelihoodModel EstimateLikelihood(const ConstraintTemplate& tmpl,
                                   const DemonstrationSet& ds,
                                   double smoothing = 1.0);

inline constexpr double kDefaultTau = 0.6;

// Runs all detectors, estimates every candidate and keeps score >= tau,
// sorted by score descending then kind name. Errors: kInvalidArgument for
// an empty corpus or tau outside (0, 1).
std::vector<LikelihoodModel> Mine(const DemonstrationSet& ds,
                                  double tau = kDefaultTau,
                                  double smoothing = 1.0);

// Template-library document:
//
//   {"templates": [{"kind": "Connectivity", "placeholders": [],
//                   "scope": "adjacent", "category": "feasibility",
//                   "counts": {"sel_sat": 20, "sel_tot": 20,
//                              "dis_sat": 0, "dis_tot": 20},
//                   "smoothing": 1, "score": 0.911}], "run_config": {...}}
//
// "score" is informational; it is recomputed from the counts on load.
std::string SerializeLibrary(const std::vector<LikelihoodModel>& library,
                             std::string_view run_config_json = {});
std::vector<LikelihoodModel> ParseLibrary(std::string_view document);

const LikelihoodModel* FindModel(const std::vector<LikelihoodModel>& library,
                                 ConstraintKind kind);

}  // namespace pathcause

#endif  // PATHCAUSE_MINER_H_
