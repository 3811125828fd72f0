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

// Human-readable and machine-readable accounts of an execution trace. Both
// renderings are produced from the same Explanation value.

#ifndef PATHCAUSE_EXPLAIN_H_
#define PATHCAUSE_EXPLAIN_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/executor.h"
#include "pathcause/graph.h"

namespace pathcause {

struct StepExplanation {
  std::size_t index = 0;
  std::string constraint;   // "Endpoints(dest=D,start=A)"
  std::string description;  // "endpoints A to D"
  std::size_t before = 0;
  std::size_t after = 0;
  std::vector<Elimination> eliminated;

  bool operator==(const StepExplanation&) const = default;
};

// Why a topology link ended up on (or off) the selected route.
struct LinkExplanation {
  NodeId src;
  NodeId dst;
  bool on_selected_path = false;
  // For links off every selected path: the step that removed the last
  // candidate using the link. Unset if no candidate ever used it.
  std::optional<std::size_t> dropped_at_step;

  bool operator==(const LinkExplanation&) const = default;
};

struct Explanation {
  std::string topology_label;
  std::string intent;
  std::string chain;
  double posterior = 0.0;
  std::size_t solution_space_size = 0;
  std::vector<StepExplanation> steps;
  std::vector<Path> selected;
  std::vector<LinkExplanation> links;

  bool operator==(const Explanation&) const = default;
};

Explanation Explain(const ExecutionTrace& trace, const Topology& t);

inline constexpr std::size_t kDefaultSampleEliminations = 5;

// Plain text, at most `max_samples` eliminations listed per step.
std::string RenderText(const Explanation& e,
                       std::size_t max_samples = kDefaultSampleEliminations);

// JSON with every elimination.
std::string RenderMachine(const Explanation& e,
                          std::string_view run_config_json = {});
// Errors: kParseError.
Explanation ParseMachine(std::string_view document);

}  // namespace pathcause

#endif  // PATHCAUSE_EXPLAIN_H_
