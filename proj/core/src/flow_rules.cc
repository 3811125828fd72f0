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

#include "pathcause/flow_rules.h"

#include <set>

#include "json_util.h"
#include "pathcause/error.h"

namespace pathcause {

using internal::Json;

std::vector<FlowRule> ExportFlowRules(const Path& path, const Topology& t,
                                      const Intent& intent) {
  if (path.size() == 0) throw Error(ErrorCode::kInvalidPath, "empty path");
  PathFacts facts = PathPredicates(t, path);
  if (!facts.is_connected || !facts.is_simple) {
    throw Error(ErrorCode::kInvalidPath,
                path.ToString() + " is not a connected simple path on " +
                    t.label());
  }
  if (path.front() != intent.start ||
      (path.size() > 1 && path.back() != intent.dest)) {
    throw Error(ErrorCode::kInvalidPath,
                path.ToString() + " does not join the intent's endpoints");
  }
  std::vector<FlowRule> rules;
  const auto& s = path.nodes();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    rules.push_back({s[i], intent.start, intent.dest, s[i + 1]});
  }
  return rules;
}

Path ReplayFlowRules(const std::vector<FlowRule>& rules, const Intent& intent) {
  std::vector<NodeId> visited = {intent.start};
  std::set<NodeId> seen = {intent.start};
  while (true) {
    const FlowRule* hit = nullptr;
    for (const FlowRule& r : rules) {
      if (r.node == visited.back() && r.match_src == intent.start &&
          r.match_dst == intent.dest) {
        hit = &r;
        break;
      }
    }
    if (!hit || !seen.insert(hit->next_hop).second) break;
    visited.push_back(hit->next_hop);
  }
  return Path(std::move(visited));
}

std::string SerializeFlowRules(const std::vector<FlowRule>& rules,
                               std::string_view run_config_json) {
  Json doc;
  Json arr = Json::array();
  for (const FlowRule& r : rules) {
    arr.push_back({{"node", r.node.str()},
                   {"match", {{"src", r.match_src.str()},
                              {"dst", r.match_dst.str()}}},
                   {"action", {{"forward", r.next_hop.str()}}}});
  }
  doc["flow_rules"] = std::move(arr);
  internal::EmbedRunConfig(doc, run_config_json);
  return doc.dump(2) + "\n";
}

std::vector<FlowRule> ParseFlowRules(std::string_view document) {
  constexpr std::string_view kWhat = "flow rules";
  Json doc = internal::ParseJson(document, kWhat);
  std::vector<FlowRule> out;
  const Json& arr = internal::Field(doc, "flow_rules", kWhat);
  if (!arr.is_array()) internal::SchemaError(kWhat, "expected an array");
  for (const Json& j : arr) {
    const Json& match = internal::Field(j, "match", kWhat);
    const Json& action = internal::Field(j, "action", kWhat);
    out.push_back({internal::NodeFrom(internal::Field(j, "node", kWhat), kWhat),
                   internal::NodeFrom(internal::Field(match, "src", kWhat), kWhat),
                   internal::NodeFrom(internal::Field(match, "dst", kWhat), kWhat),
                   internal::NodeFrom(internal::Field(action, "forward", kWhat),
                                      kWhat)});
  }
  return out;
}

}  // namespace pathcause
