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

#ifndef PATHCAUSE_TOOLS_RUN_CONFIG_H_
#define PATHCAUSE_TOOLS_RUN_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "pathcause/graph.h"
#include "pathcause/structure.h"

namespace pathcause::tools {

// Every knob a command may read. Echoed into each output document.
struct RunConfig {
  int max_hops = 0;  // 0: |nodes| - 1 of the topology in use
  double tau = 0.6;
  double smoothing = 1.0;
  ArrangementPrior prior;
  int discard_sample_size = 10;
  std::uint64_t candidate_ceiling = kDefaultCandidateCeiling;
  std::int64_t seed = 0;
  std::string output_dir = ".";

  // Errors: kInvalidArgument for out-of-range values.
  void Validate() const;
  std::string ToJson() const;
  // Overlays the keys present in `document` onto *this.
  void MergeJson(std::string_view document);

  EnumerationLimits LimitsFor(const Topology& t) const;
};

}  // namespace pathcause::tools

#endif  // PATHCAUSE_TOOLS_RUN_CONFIG_H_
