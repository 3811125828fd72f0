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

#include "pathcause/instantiate.h"

#include "pathcause/error.h"

namespace pathcause {

Instantiation Instantiate(const Intent& intent,
                          const std::vector<LikelihoodModel>& library) {
  if (library.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty template library");
  }
  ValidateIntent(intent);
  Instantiation out;

  auto mandatory = [&](ConstraintKind kind) -> const LikelihoodModel& {
    const LikelihoodModel* m = FindModel(library, kind);
    if (!m) {
      throw Error(ErrorCode::kMissingTemplate,
                  "library has no " + std::string(KindName(kind)));
    }
    return *m;
  };

  const LikelihoodModel& conn = mandatory(ConstraintKind::kConnectivity);
  const LikelihoodModel& ends = mandatory(ConstraintKind::kEndpoints);

  out.instances.push_back(
      MakeInstance(ConstraintKind::kConnectivity, {}, conn.score()));
  if (const auto* m = FindModel(library, ConstraintKind::kLoopFree)) {
    out.instances.push_back(
        MakeInstance(ConstraintKind::kLoopFree, {}, m->score()));
  } else {
    out.unmapped.push_back("PATH (LoopFree)");
  }
  out.instances.push_back(MakeInstance(
      ConstraintKind::kEndpoints,
      {{"start", intent.start}, {"dest", intent.dest}}, ends.score()));

  const LikelihoodModel* fixed = FindModel(library, ConstraintKind::kFixedNode);
  for (const NodeId& v : intent.via) {
    if (!fixed) {
      out.unmapped.push_back("VIA " + v.str());
      continue;
    }
    out.instances.push_back(MakeInstance(ConstraintKind::kFixedNode,
                                         {{"node", v}}, fixed->score()));
  }
  for (const NodeId& a : intent.avoid) {
    if (!fixed) {
      out.unmapped.push_back("AVOID " + a.str());
      continue;
    }
    out.instances.push_back(MakeInstance(ConstraintKind::kFixedNode,
                                         {{"node", a}}, fixed->score(),
                                         /*exclude=*/true));
  }
  if (intent.objective == Objective::kShortest) {
    if (const auto* m = FindModel(library, ConstraintKind::kShortest)) {
      out.instances.push_back(
          MakeInstance(ConstraintKind::kShortest, {}, m->score()));
    } else {
      out.unmapped.push_back("OBJECTIVE SHORTEST");
    }
  }
  return out;
}

}  // namespace pathcause
