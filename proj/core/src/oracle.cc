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

#include "pathcause/oracle.h"

#include <vector>

#include "index_graph.h"
#include "pathcause/error.h"

namespace pathcause {

PathSet OracleTargetSpace(const Topology& t, const Intent& intent,
                          const EnumerationLimits& limits) {
  auto index_of = [&](const NodeId& n) {
    int i = t.IndexOf(n);
    if (i < 0) throw Error(ErrorCode::kUnknownEndpoint, "'" + n.str() + "'");
    return i;
  };
  std::vector<int> via, avoid;
  for (const NodeId& v : intent.via) via.push_back(index_of(v));
  for (const NodeId& a : intent.avoid) avoid.push_back(index_of(a));

  internal::IndexGraph g(t);
  std::vector<std::pair<Rational, Path>> feasible;
  ForEachCandidate(t, intent.start, intent.dest, limits,
                   [&](std::span<const int> seq) {
                     auto w = g.ConnectedWeight(seq);
                     if (!w || !g.IsSimple(seq)) return;
                     for (int v : via) {
                       if (!internal::IndexGraph::Visits(seq, v)) return;
                     }
                     for (int a : avoid) {
                       if (internal::IndexGraph::Visits(seq, a)) return;
                     }
                     feasible.emplace_back(*w, g.ToPath(t, seq));
                   });

  PathSet out;
  if (feasible.empty()) return out;
  if (intent.objective == Objective::kAny) {
    for (auto& [w, p] : feasible) out.Insert(std::move(p));
    return out;
  }
  Rational best = feasible.front().first;
  for (const auto& [w, p] : feasible) best = std::min(best, w);
  for (auto& [w, p] : feasible) {
    if (w == best) out.Insert(std::move(p));
  }
  return out;
}

}  // namespace pathcause
