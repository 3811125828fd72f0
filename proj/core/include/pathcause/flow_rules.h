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

#ifndef PATHCAUSE_FLOW_RULES_H_
#define PATHCAUSE_FLOW_RULES_H_

#include <string>
#include <string_view>
#include <vector>

#include "pathcause/graph.h"
#include "pathcause/intent.h"

namespace pathcause {

// Per-switch entry: traffic matching (match_src, match_dst) arriving at
// `node` is forwarded to `next_hop`.
struct FlowRule {
  NodeId node;
  NodeId match_src;
  NodeId match_dst;
  NodeId next_hop;

  bool operator==(const FlowRule&) const = default;
};

// One rule per non-terminal node of `path`. Errors: kInvalidPath unless the
// path is connected and simple on t, starts at intent.start and (when it
// has more than one node) ends at intent.dest.
std::vector<FlowRule> ExportFlowRules(const Path& path, const Topology& t,
                                      const Intent& intent);

// Follows the rules from intent.start until no rule matches. Returns the
// visited sequence; stops (returning what it has) if a node repeats.
Path ReplayFlowRules(const std::vector<FlowRule>& rules, const Intent& intent);

// {"flow_rules": [{"node": "A", "match": {"src": "A", "dst": "D"},
//                  "action": {"forward": "B"}}], "run_config": {...}}
std::string SerializeFlowRules(const std::vector<FlowRule>& rules,
                               std::string_view run_config_json = {});
std::vector<FlowRule> ParseFlowRules(std::string_view document);

}  // namespace pathcause

#endif  // PATHCAUSE_FLOW_RULES_H_
