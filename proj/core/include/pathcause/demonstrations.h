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

// Demonstration corpora: recorded path-selection practices, each listing
// the paths an operator selected and the ones they discarded.

#ifndef PATHCAUSE_DEMONSTRATIONS_H_
#define PATHCAUSE_DEMONSTRATIONS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/graph.h"

namespace pathcause {

struct PracticeRecord {
  std::string topology_label;
  PathSet selected;
  PathSet discarded;

  bool operator==(const PracticeRecord&) const = default;
};

struct DemonstrationSet {
  std::map<std::string, Topology> topologies;
  std::vector<PracticeRecord> records;
  std::optional<std::int64_t> seed;

  const Topology& TopologyFor(const PracticeRecord& r) const;

  bool operator==(const DemonstrationSet&) const = default;
};

// Checks every record against the corpus invariants. Errors:
// kUnknownTopologyLabel, kEmptySelected, kOverlappingSets, kUnknownEndpoint
// (a path names a node missing from its topology).
void ValidateDemonstrations(const DemonstrationSet& ds);

// Corpus document:
//
//   {"seed": 7,
//    "topologies": [<topology document>, ...],
//    "records": [{"topology": "T1", "selected": [["A","B"]],
//                 "discarded": [["A","C","B"], ...]}, ...]}
//
// Any other top-level key (e.g. "run_config") is ignored on load. Errors:
// kParseError plus ValidateDemonstrations's errors.
DemonstrationSet ParseDemonstrations(std::string_view document);

// One record per line, so corpora diff and scan cleanly. `extra_json`, when
// non-empty, must be a JSON object text and is embedded as "run_config".
std::string SerializeDemonstrations(const DemonstrationSet& ds,
                                    std::string_view extra_json = {});

// Practice generator. Selected paths are the oracle target space of a drawn
// endpoint pair under a shortest-path policy (optionally through a fixed
// node).
struct PolicySpec {
  std::optional<NodeId> via;
  // 0 means |nodes| - 1.
  int max_hops = 0;
  int discard_sample_size = 10;
  int retry_cap = 100;
  std::uint64_t candidate_ceiling = kDefaultCandidateCeiling;
};

// Errors: kInvalidArgument (n_records < 1, bad policy), kUnknownEndpoint
// (via node not in t), kNoValidPath (no drawable pair has a target path
// within retry_cap attempts).
DemonstrationSet GenerateDemonstrations(const Topology& t,
                                        const PolicySpec& policy,
                                        int n_records, std::int64_t seed);

// Failure modes a generated discard can exhibit relative to a policy.
struct DiscardModes {
  bool disconnected = false;
  bool loopy = false;
  bool wrong_endpoints = false;
  bool misses_via = false;
  bool non_shortest = false;

  bool Any() const {
    return disconnected || loopy || wrong_endpoints || misses_via ||
           non_shortest;
  }
};

// Classifies `p` against the policy used for a record whose target space
// is `target` (all members share endpoints and weight).
DiscardModes ClassifyAgainstPolicy(const Topology& t, const PolicySpec& policy,
                                   const PathSet& target, const Path& p);

}  // namespace pathcause

#endif  // PATHCAUSE_DEMONSTRATIONS_H_
