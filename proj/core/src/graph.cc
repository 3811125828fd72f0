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

#include "pathcause/graph.h"

#include <algorithm>
#include <sstream>

#include "pathcause/error.h"

namespace pathcause {

NodeId::NodeId(std::string name) : name_(std::move(name)) {
  if (!IsValidName(name_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid node name '" + name_ + "'");
  }
}

bool NodeId::IsValidName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-';
  });
}

bool Topology::HasNode(const NodeId& n) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), n);
}

bool Topology::HasLink(const NodeId& from, const NodeId& to) const {
  return arcs_.count({from, to}) > 0;
}

std::optional<Rational> Topology::LinkWeight(const NodeId& from,
                                             const NodeId& to) const {
  auto it = arcs_.find({from, to});
  if (it == arcs_.end()) return std::nullopt;
  return it->second;
}

int Topology::IndexOf(const NodeId& n) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
  if (it == nodes_.end() || *it != n) return -1;
  return static_cast<int>(it - nodes_.begin());
}

Topology BuildTopology(std::string label, std::vector<NodeId> nodes,
                       std::vector<Link> links) {
  if (nodes.empty()) {
    throw Error(ErrorCode::kEmptyNodeSet, "topology '" + label + "'");
  }
  Topology t;
  t.label_ = std::move(label);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  t.nodes_ = std::move(nodes);

  for (const Link& l : links) {
    const std::string where = l.src.str() + "->" + l.dst.str();
    if (!t.HasNode(l.src) || !t.HasNode(l.dst)) {
      throw Error(ErrorCode::kUnknownEndpoint, "link " + where);
    }
    if (l.src == l.dst) throw Error(ErrorCode::kSelfLoop, "link " + where);
    if (l.weight < Rational(0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "negative weight on link " + where);
    }
    if (t.HasLink(l.src, l.dst) || (!l.directed && t.HasLink(l.dst, l.src))) {
      throw Error(ErrorCode::kDuplicateLink, "link " + where);
    }
    t.arcs_.emplace(std::make_pair(l.src, l.dst), l.weight);
    if (!l.directed) t.arcs_.emplace(std::make_pair(l.dst, l.src), l.weight);
  }
  t.links_ = std::move(links);
  return t;
}

Path::Path(std::initializer_list<std::string_view> names) {
  nodes_.reserve(names.size());
  for (auto n : names) nodes_.emplace_back(std::string(n));
}

std::string Path::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (i > 0) out += '-';
    out += nodes_[i].str();
  }
  return out;
}

PathSet PathSet::Intersect(const PathSet& o) const {
  PathSet out;
  std::set_intersection(members_.begin(), members_.end(), o.members_.begin(),
                        o.members_.end(),
                        std::inserter(out.members_, out.members_.end()));
  return out;
}

std::size_t PathSet::IntersectionSize(const PathSet& o) const {
  const PathSet& small = size() <= o.size() ? *this : o;
  const PathSet& large = size() <= o.size() ? o : *this;
  std::size_t n = 0;
  for (const Path& p : small) n += large.Contains(p) ? 1 : 0;
  return n;
}

bool PathSet::IsSubsetOf(const PathSet& o) const {
  return std::includes(o.members_.begin(), o.members_.end(), members_.begin(),
                       members_.end());
}

PathFacts PathPredicates(const Topology& t, const Path& p) {
  PathFacts f;
  const auto& seq = p.nodes();
  if (!seq.empty()) f.endpoints = std::make_pair(seq.front(), seq.back());

  bool connected = true;
  bool repeated = false;
  Rational weight(0);
  std::set<std::pair<NodeId, NodeId>> used_links;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!f.visited.insert(seq[i]).second) repeated = true;
    if (i == 0) continue;
    auto w = t.LinkWeight(seq[i - 1], seq[i]);
    if (!w) {
      connected = false;
      continue;
    }
    weight += *w;
    // An undirected link is the same link in either direction.
    auto key = std::minmax(seq[i - 1], seq[i]);
    bool undirected_pair = t.HasLink(seq[i], seq[i - 1]);
    std::pair<NodeId, NodeId> link =
        undirected_pair ? std::make_pair(key.first, key.second)
                        : std::make_pair(seq[i - 1], seq[i]);
    if (!used_links.insert(link).second) repeated = true;
  }
  f.is_connected = connected && !seq.empty();
  f.is_simple = !repeated;
  if (f.is_connected) f.total_weight = weight;
  return f;
}

std::uint64_t SolutionSpaceSize(std::size_t node_count, bool same_endpoints,
                                int max_hops) {
  // hops h >= 1 contribute n^(h-1) sequences (free interior positions).
  std::uint64_t total = same_endpoints ? 1 : 0;
  std::uint64_t term = 1;
  for (int h = 1; h <= max_hops; ++h) {
    if (total > UINT64_MAX - term) return UINT64_MAX;
    total += term;
    if (h < max_hops) {
      if (node_count != 0 && term > UINT64_MAX / node_count) return UINT64_MAX;
      term *= node_count;
    }
  }
  return total;
}

namespace {

void CheckEnumerationArgs(const Topology& t, const NodeId& start,
                          const NodeId& dest, const EnumerationLimits& limits) {
  if (!t.HasNode(start)) {
    throw Error(ErrorCode::kUnknownEndpoint, "'" + start.str() + "'");
  }
  if (!t.HasNode(dest)) {
    throw Error(ErrorCode::kUnknownEndpoint, "'" + dest.str() + "'");
  }
  if (limits.max_hops < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_hops must be >= 1");
  }
  std::uint64_t size =
      SolutionSpaceSize(t.nodes().size(), start == dest, limits.max_hops);
  if (size > limits.candidate_ceiling) {
    throw Error(ErrorCode::kSpaceTooLarge,
                std::to_string(size) + " candidates exceed the ceiling of " +
                    std::to_string(limits.candidate_ceiling));
  }
}

}  // namespace

void ForEachCandidate(const Topology& t, const NodeId& start,
                      const NodeId& dest, const EnumerationLimits& limits,
                      const std::function<void(std::span<const int>)>& visit) {
  CheckEnumerationArgs(t, start, dest, limits);
  const int n = static_cast<int>(t.nodes().size());
  const int s = t.IndexOf(start);
  const int d = t.IndexOf(dest);

  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(limits.max_hops) + 1);
  if (s == d) {
    seq = {s};
    visit(seq);
  }
  // Iterate interior digits like an odometer, one hop count at a time.
  for (int hops = 1; hops <= limits.max_hops; ++hops) {
    seq.assign(static_cast<std::size_t>(hops) + 1, 0);
    seq.front() = s;
    seq.back() = d;
    while (true) {
      visit(seq);
      int pos = hops - 1;
      while (pos >= 1 && seq[pos] == n - 1) {
        seq[pos] = 0;
        --pos;
      }
      if (pos < 1) break;
      ++seq[pos];
    }
  }
}

PathSet EnumerateSolutionSpace(const Topology& t,
                               const std::pair<NodeId, NodeId>& endpoints,
                               const EnumerationLimits& limits) {
  // nodes() is sorted, so ordering index sequences orders the paths.
  std::vector<std::vector<int>> seqs;
  ForEachCandidate(t, endpoints.first, endpoints.second, limits,
                   [&](std::span<const int> seq) {
                     seqs.emplace_back(seq.begin(), seq.end());
                   });
  std::sort(seqs.begin(), seqs.end());
  PathSet out;
  const auto& names = t.nodes();
  for (const auto& seq : seqs) {
    std::vector<NodeId> nodes;
    nodes.reserve(seq.size());
    for (int i : seq) nodes.push_back(names[i]);
    out.Append(Path(std::move(nodes)));
  }
  return out;
}

}  // namespace pathcause
