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

// The closed inventory of constraint templates and their instantiated form.

#ifndef PATHCAUSE_CONSTRAINTS_H_
#define PATHCAUSE_CONSTRAINTS_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/graph.h"

namespace pathcause {

enum class ConstraintKind {
  kFixedNode,
  kEndpoints,
  kConnectivity,
  kLoopFree,
  kShortest,
};

inline constexpr std::array<ConstraintKind, 5> kAllConstraintKinds = {
    ConstraintKind::kConnectivity, ConstraintKind::kEndpoints,
    ConstraintKind::kFixedNode, ConstraintKind::kLoopFree,
    ConstraintKind::kShortest};

enum class ConstraintScope { kPoint, kAdjacent, kGlobal };
enum class ConstraintCategory { kFeasibility, kOptimization };

// "FixedNode", "Endpoints", ...
std::string_view KindName(ConstraintKind kind);
// Errors: kParseError for unknown names.
ConstraintKind KindFromName(std::string_view name);
std::string_view ScopeName(ConstraintScope scope);
std::string_view CategoryName(ConstraintCategory category);

// Environment-invariant predicate over paths. Everything about a template
// follows from its kind; concrete nodes only appear once it is instantiated.
class ConstraintTemplate {
 public:
  explicit ConstraintTemplate(ConstraintKind kind) : kind_(kind) {}

  ConstraintKind kind() const { return kind_; }
  std::string_view name() const { return KindName(kind_); }
  // FixedNode: {"node"}; Endpoints: {"start", "dest"}; others: {}.
  const std::vector<std::string>& placeholders() const;
  ConstraintScope scope() const;
  ConstraintCategory category() const;

  bool operator==(const ConstraintTemplate&) const = default;
  auto operator<=>(const ConstraintTemplate&) const = default;

 private:
  ConstraintKind kind_;
};

// A template with its placeholders bound to topology nodes. `exclude` turns
// a FixedNode into its negation (the path must avoid the node).
struct ConstraintInstance {
  ConstraintTemplate tmpl{ConstraintKind::kConnectivity};
  std::map<std::string, NodeId> bindings;
  bool exclude = false;
  double score = 0.0;

  // "FixedNode" or "AvoidNode" for an excluded FixedNode; the label used in
  // chain tie-breaks and serialized documents.
  std::string KindLabel() const;
  // "FixedNode(node=B)"
  std::string ToString() const;
  // Human wording: "connectivity", "loop-free (dead-lock free)", ...
  std::string Describe() const;

  // Identity ignores the score.
  bool SameConstraint(const ConstraintInstance& o) const {
    return tmpl == o.tmpl && bindings == o.bindings && exclude == o.exclude;
  }
};

// Total order on constraint identity: kind label, then bindings.
bool ConstraintIdentityLess(const ConstraintInstance& a,
                            const ConstraintInstance& b);

// Errors: kInvalidArgument when bindings do not cover exactly the template's
// placeholders, or `exclude` is set on a non-FixedNode template.
ConstraintInstance MakeInstance(ConstraintKind kind,
                                std::map<std::string, NodeId> bindings,
                                double score = 0.0, bool exclude = false);

// Minimal total weight over the connected members of `paths`, the yardstick
// a Shortest instance compares against.
std::optional<Rational> MinConnectedWeight(const Topology& t,
                                           const PathSet& paths);

// Returns the reason `p` violates `c`, or nullopt when it satisfies it.
// Shortest needs `shortest_reference`: a path satisfies it when connected
// and no heavier than the reference. With no reference every path fails.
std::optional<std::string> CheckConstraint(
    const ConstraintInstance& c, const Topology& t, const Path& p,
    const std::optional<Rational>& shortest_reference = std::nullopt);

inline bool Satisfies(const ConstraintInstance& c, const Topology& t,
                      const Path& p,
                      const std::optional<Rational>& shortest_reference =
                          std::nullopt) {
  return !CheckConstraint(c, t, p, shortest_reference).has_value();
}

}  // namespace pathcause

#endif  // PATHCAUSE_CONSTRAINTS_H_
