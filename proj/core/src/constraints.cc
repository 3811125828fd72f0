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

#include "pathcause/constraints.h"

#include <algorithm>
#include <sstream>

#include "pathcause/error.h"

namespace pathcause {

std::string_view KindName(ConstraintKind kind) {
  switch (kind) {
    case ConstraintKind::kFixedNode: return "FixedNode";
    case ConstraintKind::kEndpoints: return "Endpoints";
    case ConstraintKind::kConnectivity: return "Connectivity";
    case ConstraintKind::kLoopFree: return "LoopFree";
    case ConstraintKind::kShortest: return "Shortest";
  }
  return "";
}

ConstraintKind KindFromName(std::string_view name) {
  for (ConstraintKind k : kAllConstraintKinds) {
    if (KindName(k) == name) return k;
  }
  throw Error(ErrorCode::kParseError,
              "unknown constraint kind '" + std::string(name) + "'");
}

std::string_view ScopeName(ConstraintScope scope) {
  switch (scope) {
    case ConstraintScope::kPoint: return "point";
    case ConstraintScope::kAdjacent: return "adjacent";
    case ConstraintScope::kGlobal: return "global";
  }
  return "";
}

std::string_view CategoryName(ConstraintCategory category) {
  return category == ConstraintCategory::kFeasibility ? "feasibility"
                                                      : "optimization";
}

const std::vector<std::string>& ConstraintTemplate::placeholders() const {
  static const std::vector<std::string> kNone;
  static const std::vector<std::string> kNode = {"node"};
  static const std::vector<std::string> kEnds = {"start", "dest"};
  switch (kind_) {
    case ConstraintKind::kFixedNode: return kNode;
    case ConstraintKind::kEndpoints: return kEnds;
    default: return kNone;
  }
}

ConstraintScope ConstraintTemplate::scope() const {
  switch (kind_) {
    case ConstraintKind::kFixedNode: return ConstraintScope::kPoint;
    case ConstraintKind::kConnectivity: return ConstraintScope::kAdjacent;
    default: return ConstraintScope::kGlobal;
  }
}

ConstraintCategory ConstraintTemplate::category() const {
  return kind_ == ConstraintKind::kShortest ? ConstraintCategory::kOptimization
                                            : ConstraintCategory::kFeasibility;
}

std::string ConstraintInstance::KindLabel() const {
  if (exclude) return "AvoidNode";
  return std::string(tmpl.name());
}

std::string ConstraintInstance::ToString() const {
  std::string out = KindLabel();
  if (bindings.empty()) return out;
  out += '(';
  bool first = true;
  for (const auto& [k, v] : bindings) {
    if (!first) out += ',';
    first = false;
    out += k + "=" + v.str();
  }
  return out + ')';
}

std::string ConstraintInstance::Describe() const {
  auto bound = [&](const char* key) {
    auto it = bindings.find(key);
    return it == bindings.end() ? std::string("?") : it->second.str();
  };
  switch (tmpl.kind()) {
    case ConstraintKind::kConnectivity: return "connectivity";
    case ConstraintKind::kLoopFree: return "loop-free (dead-lock free)";
    case ConstraintKind::kShortest: return "shortest";
    case ConstraintKind::kEndpoints:
      return "endpoints " + bound("start") + " to " + bound("dest");
    case ConstraintKind::kFixedNode:
      return (exclude ? "avoid node " : "pass through node ") + bound("node");
  }
  return ToString();
}

bool ConstraintIdentityLess(const ConstraintInstance& a,
                            const ConstraintInstance& b) {
  std::string la = a.KindLabel(), lb = b.KindLabel();
  if (la != lb) return la < lb;
  return a.bindings < b.bindings;
}

ConstraintInstance MakeInstance(ConstraintKind kind,
                                std::map<std::string, NodeId> bindings,
                                double score, bool exclude) {
  ConstraintInstance c;
  c.tmpl = ConstraintTemplate(kind);
  const auto& expected = c.tmpl.placeholders();
  bool matches = bindings.size() == expected.size();
  for (const std::string& ph : expected) matches = matches && bindings.count(ph);
  if (!matches) {
    throw Error(ErrorCode::kInvalidArgument,
                "bindings do not match the placeholders of " +
                    std::string(KindName(kind)));
  }
  if (exclude && kind != ConstraintKind::kFixedNode) {
    throw Error(ErrorCode::kInvalidArgument,
                "only FixedNode can be negated");
  }
  c.bindings = std::move(bindings);
  c.exclude = exclude;
  c.score = score;
  return c;
}

namespace {

// Direct checks that avoid building the full PathFacts for every candidate.
std::optional<std::string> FirstMissingLink(const Topology& t, const Path& p) {
  const auto& s = p.nodes();
  if (s.empty()) return "path is empty";
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!t.HasLink(s[i - 1], s[i])) {
      return "link " + s[i - 1].str() + "->" + s[i].str() +
             " absent from topology";
    }
  }
  return std::nullopt;
}

// A repeated link always repeats a node, so a node check suffices.
std::optional<std::string> FirstRepeat(const Path& p) {
  const auto& s = p.nodes();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (std::find(s.begin(), s.begin() + i, s[i]) != s.begin() + i) {
      return "node " + s[i].str() + " visited more than once";
    }
  }
  return std::nullopt;
}

std::optional<Rational> WeightOf(const Topology& t, const Path& p) {
  const auto& s = p.nodes();
  if (s.empty()) return std::nullopt;
  Rational total(0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    auto w = t.LinkWeight(s[i - 1], s[i]);
    if (!w) return std::nullopt;
    total += *w;
  }
  return total;
}

}  // namespace

std::optional<Rational> MinConnectedWeight(const Topology& t,
                                           const PathSet& paths) {
  std::optional<Rational> best;
  for (const Path& p : paths) {
    auto w = WeightOf(t, p);
    if (w && (!best || *w < *best)) best = w;
  }
  return best;
}

std::optional<std::string> CheckConstraint(
    const ConstraintInstance& c, const Topology& t, const Path& p,
    const std::optional<Rational>& shortest_reference) {
  switch (c.tmpl.kind()) {
    case ConstraintKind::kConnectivity: {
      return FirstMissingLink(t, p);
    }
    case ConstraintKind::kLoopFree: {
      return FirstRepeat(p);
    }
    case ConstraintKind::kEndpoints: {
      const NodeId& start = c.bindings.at("start");
      const NodeId& dest = c.bindings.at("dest");
      if (p.size() == 0) return "path is empty";
      if (p.front() != start) {
        return "starts at " + p.front().str() + " instead of " + start.str();
      }
      if (p.back() != dest) {
        return "ends at " + p.back().str() + " instead of " + dest.str();
      }
      return std::nullopt;
    }
    case ConstraintKind::kFixedNode: {
      const NodeId& node = c.bindings.at("node");
      const auto& seq = p.nodes();
      bool visits = std::find(seq.begin(), seq.end(), node) != seq.end();
      if (c.exclude) {
        if (!visits) return std::nullopt;
        return "passes through avoided node " + node.str();
      }
      if (visits) return std::nullopt;
      return "does not pass through node " + node.str();
    }
    case ConstraintKind::kShortest: {
      auto w = WeightOf(t, p);
      if (!w) return "not connected, total weight undefined";
      if (!shortest_reference) return "no reference weight to compare against";
      if (*w <= *shortest_reference) return std::nullopt;
      return "total weight " + w->ToExactDecimal() + " exceeds minimum " +
             shortest_reference->ToExactDecimal();
    }
  }
  return "unknown constraint";
}

}  // namespace pathcause
