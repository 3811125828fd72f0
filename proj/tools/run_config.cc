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

#include "run_config.h"

#include <algorithm>

#include "json.hpp"
#include "pathcause/error.h"

namespace pathcause::tools {

using Json = nlohmann::ordered_json;

void RunConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (max_hops < 0) fail("max_hops must be >= 1 (or 0 for automatic)");
  if (!(tau > 0.0 && tau < 1.0)) fail("tau must lie in (0, 1)");
  if (!(smoothing > 0.0)) fail("smoothing must be > 0");
  prior.Validate();
  if (discard_sample_size < 0) fail("discard sample size must be >= 0");
  if (candidate_ceiling < 1) fail("candidate ceiling must be >= 1");
}

std::string RunConfig::ToJson() const {
  Json j;
  j["max_hops"] = max_hops;
  j["tau"] = tau;
  j["smoothing"] = smoothing;
  j["prior"] = {{"feasibility_first_weight", prior.feasibility_first_weight},
                {"scope_order_weight", prior.scope_order_weight}};
  j["discard_sample_size"] = discard_sample_size;
  j["candidate_ceiling"] = candidate_ceiling;
  j["seed"] = seed;
  j["output_dir"] = output_dir;
  return j.dump();
}

void RunConfig::MergeJson(std::string_view document) {
  Json j;
  try {
    j = Json::parse(document.begin(), document.end());
    if (!j.is_object()) throw Error(ErrorCode::kParseError, "run config");
    max_hops = j.value("max_hops", max_hops);
    tau = j.value("tau", tau);
    smoothing = j.value("smoothing", smoothing);
    if (auto p = j.find("prior"); p != j.end()) {
      prior.feasibility_first_weight =
          p->value("feasibility_first_weight", prior.feasibility_first_weight);
      prior.scope_order_weight =
          p->value("scope_order_weight", prior.scope_order_weight);
    }
    discard_sample_size = j.value("discard_sample_size", discard_sample_size);
    candidate_ceiling = j.value("candidate_ceiling", candidate_ceiling);
    seed = j.value("seed", seed);
    output_dir = j.value("output_dir", output_dir);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("run config: ") + e.what());
  }
}

EnumerationLimits RunConfig::LimitsFor(const Topology& t) const {
  EnumerationLimits limits;
  limits.max_hops = max_hops > 0
                        ? max_hops
                        : std::max(1, static_cast<int>(t.nodes().size()) - 1);
  limits.candidate_ceiling = candidate_ceiling;
  return limits;
}

}  // namespace pathcause::tools
