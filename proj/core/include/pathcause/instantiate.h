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

#ifndef PATHCAUSE_INSTANTIATE_H_
#define PATHCAUSE_INSTANTIATE_H_

#include <string>
#include <vector>

#include "pathcause/constraints.h"
#include "pathcause/intent.h"
#include "pathcause/miner.h"

namespace pathcause {

struct Instantiation {
  // Unordered bag; ordering is decided by the structure posterior.
  std::vector<ConstraintInstance> instances;
  // Intent entities whose template is absent from the library.
  std::vector<std::string> unmapped;
};

// Maps intent entities onto library templates:
//   PATH            -> Connectivity, LoopFree
//   FROM/TO         -> Endpoints(start, dest)
//   VIA n           -> FixedNode(n), one per node
//   AVOID n         -> FixedNode(n) with exclusion
//   OBJECTIVE SHORTEST -> Shortest
// Each instance inherits its template's likelihood score. Missing optional
// templates are reported in `unmapped`. Errors: kInvalidArgument (empty
// library), kMissingTemplate (no Connectivity or Endpoints).
Instantiation Instantiate(const Intent& intent,
                          const std::vector<LikelihoodModel>& library);

}  // namespace pathcause

#endif  // PATHCAUSE_INSTANTIATE_H_
