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

// Topology and path representation, bounded solution-space enumeration and
// the primitive path facts every constraint is built from.

#ifndef PATHCAUSE_GRAPH_H_
#define PATHCAUSE_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathcause/rational.h"

namespace pathcause {

// Node name: a non-empty token of letters, digits, '_' and '-'. Compared by
// bytes, so "a" and "A" are distinct nodes.
class NodeId {
 public:
  NodeId() = default;
  // Throws Error(kInvalidArgument) for names that are not valid tokens.
  explicit NodeId(std::string name);

  static bool IsValidName(std::string_view name);

  const std::string& str() const { return name_; }

  auto operator<=>(const NodeId&) const = default;

 private:
  std::string name_;
};

struct Link {
  NodeId src;
  NodeId dst;
  Rational weight{1};
  bool directed = false;

  bool operator==(const Link&) const = default;
};

class Topology {
 public:
  Topology() = default;

  const std::string& label() const { return label_; }
  // Sorted ascending.
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  bool HasNode(const NodeId& n) const;
  // Undirected links answer for both orientations.
  bool HasLink(const NodeId& from, const NodeId& to) const;
  std::optional<Rational> LinkWeight(const NodeId& from,
                                     const NodeId& to) const;
  // Index into nodes(), or -1.
  int IndexOf(const NodeId& n) const;

  bool operator==(const Topology& o) const {
    return label_ == o.label_ && nodes_ == o.nodes_ && links_ == o.links_;
  }

 private:
  friend Topology BuildTopology(std::string label, std::vector<NodeId> nodes,
                                std::vector<Link> links);

  std::string label_;
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::map<std::pair<NodeId, NodeId>, Rational> arcs_;
};

// Validates and assembles a topology. Errors: kEmptyNodeSet,
// kUnknownEndpoint, kSelfLoop, kDuplicateLink (a second link on an ordered
// pair already covered, including the reverse of an undirected link).
Topology BuildTopology(std::string label, std::vector<NodeId> nodes,
                       std::vector<Link> links);

// A node sequence. May be disconnected or revisit nodes; validity is what
// constraints decide.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<NodeId> nodes) : nodes_(std::move(nodes)) {}
  Path(std::initializer_list<std::string_view> names);

  const std::vector<NodeId>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  std::size_t hop_count() const {
    return nodes_.empty() ? 0 : nodes_.size() - 1;
  }
  const NodeId& front() const { return nodes_.front(); }
  const NodeId& back() const { return nodes_.back(); }

  std::string ToString() const;  // "A-B-C"

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<NodeId> nodes_;
};

// Deduplicated set of paths iterated in lexicographic node-sequence order.
class PathSet {
 public:
  using const_iterator = std::set<Path>::const_iterator;

  PathSet() = default;
  PathSet(std::initializer_list<Path> paths) : members_(paths) {}

  bool Insert(Path p) { return members_.insert(std::move(p)).second; }
  // Same as Insert; constant time when `p` sorts after every member.
  bool Append(Path p) {
    std::size_t before = members_.size();
    members_.emplace_hint(members_.end(), std::move(p));
    return members_.size() != before;
  }
  bool Contains(const Path& p) const { return members_.count(p) > 0; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }

  PathSet Intersect(const PathSet& o) const;
  std::size_t IntersectionSize(const PathSet& o) const;
  bool IsSubsetOf(const PathSet& o) const;

  bool operator==(const PathSet&) const = default;

 private:
  std::set<Path> members_;
};

// Primitive facts about a path on a topology. Total: any node sequence is
// accepted, including names absent from the topology.
struct PathFacts {
  bool is_connected = false;
  bool is_simple = false;
  std::set<NodeId> visited;
  std::optional<std::pair<NodeId, NodeId>> endpoints;
  // Defined only when is_connected.
  std::optional<Rational> total_weight;

  bool Visits(const NodeId& n) const { return visited.count(n) > 0; }
};

PathFacts PathPredicates(const Topology& t, const Path& p);

// Default ceiling on enumerated candidates.
inline constexpr std::uint64_t kDefaultCandidateCeiling = 1'000'000;

struct EnumerationLimits {
  // Must be >= 1.
  int max_hops = 1;
  std::uint64_t candidate_ceiling = kDefaultCandidateCeiling;
};

// Number of sequences EnumerateSolutionSpace would produce, saturating at
// UINT64_MAX.
std::uint64_t SolutionSpaceSize(std::size_t node_count, bool same_endpoints,
                                int max_hops);

// Calls `visit` for every node sequence from `start` to `dest` with at most
// max_hops hops, in lexicographic order of node indices. Sequences are
// drawn over the whole node set, so disconnected and looping candidates are
// included. The span holds indices into t.nodes() and is only valid during
// the call.
void ForEachCandidate(
    const Topology& t, const NodeId& start, const NodeId& dest,
    const EnumerationLimits& limits,
    const std::function<void(std::span<const int>)>& visit);

// Materialized form of ForEachCandidate. Errors: kUnknownEndpoint,
// kInvalidArgument (max_hops < 1), kSpaceTooLarge.
PathSet EnumerateSolutionSpace(const Topology& t,
                               const std::pair<NodeId, NodeId>& endpoints,
                               const EnumerationLimits& limits);

}  // namespace pathcause

#endif  // PATHCAUSE_GRAPH_H_
