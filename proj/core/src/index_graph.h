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

// Dense index view of a topology for the hot enumeration loops.

#ifndef PATHCAUSE_SRC_INDEX_GRAPH_H_
#define PATHCAUSE_SRC_INDEX_GRAPH_H_

#include <optional>
#include <span>
#include <vector>

#include "pathcause/graph.h"

namespace pathcause::internal {

class IndexGraph {
 public:
  explicit IndexGraph(const Topology& t)
      : n_(static_cast<int>(t.nodes().size())),
        weight_(static_cast<std::size_t>(n_ * n_)) {
    for (int i = 0; i < n_; ++i) {
      for (int j = 0; j < n_; ++j) {
        weight_[Slot(i, j)] = t.LinkWeight(t.nodes()[i], t.nodes()[j]);
      }
    }
  }

  int size() const { return n_; }

  // Total weight when every hop is a link.
  std::optional<Rational> ConnectedWeight(std::span<const int> seq) const {
    Rational total(0);
    for (std::size_t i = 1; i < seq.size(); ++i) {
      const auto& w = weight_[Slot(seq[i - 1], seq[i])];
      if (!w) return std::nullopt;
      total += *w;
    }
    return total;
  }

  // No node repeats. (A repeated link always repeats a node.)
  bool IsSimple(std::span<const int> seq) const {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int v : seq) {
      if (seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  static bool Visits(std::span<const int> seq, int node) {
    for (int v : seq) {
      if (v == node) return true;
    }
    return false;
  }

  Path ToPath(const Topology& t, std::span<const int> seq) const {
    std::vector<NodeId> nodes;
    nodes.reserve(seq.size());
    for (int v : seq) nodes.push_back(t.nodes()[v]);
    return Path(std::move(nodes));
  }

 private:
  std::size_t Slot(int i, int j) const {
    return static_cast<std::size_t>(i * n_ + j);
  }

  int n_;
  std::vector<std::optional<Rational>> weight_;
};

}  // namespace pathcause::internal

#endif  // PATHCAUSE_SRC_INDEX_GRAPH_H_
