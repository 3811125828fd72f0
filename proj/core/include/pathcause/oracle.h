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

#ifndef PATHCAUSE_ORACLE_H_
#define PATHCAUSE_ORACLE_H_

#include "pathcause/graph.h"
#include "pathcause/intent.h"

namespace pathcause {

// Ground truth for an intent by exhaustive filtering of the solution space:
// connected, loop-free, correct endpoints, through every VIA node, clear of
// every AVOID node and, for SHORTEST, of minimal total weight (ties kept).
// Never consults learned constraints. Errors: as EnumerateSolutionSpace.
PathSet OracleTargetSpace(const Topology& t, const Intent& intent,
                          const EnumerationLimits& limits);

}  // namespace pathcause

#endif  // PATHCAUSE_ORACLE_H_
