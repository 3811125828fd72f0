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

#include "pathcause/demonstrations.h"

#include <algorithm>
#include <sstream>

#include "index_graph.h"
#include "json_util.h"
#include "pathcause/error.h"
#include "pathcause/oracle.h"
#include "pathcause/random.h"

namespace pathcause {

using internal::Json;

const Topology& DemonstrationSet::TopologyFor(const PracticeRecord& r) const {
  auto it = topologies.find(r.topology_label);
  if (it == topologies.end()) {
    throw Error(ErrorCode::kUnknownTopologyLabel, "'" + r.topology_label + "'");
  }
  return it->second;
}

void ValidateDemonstrations(const DemonstrationSet& ds) {
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const PracticeRecord& r = ds.records[i];
    const std::string where = "record " + std::to_string(i);
    auto it = ds.topologies.find(r.topology_label);
    if (it == ds.topologies.end()) {
      throw Error(ErrorCode::kUnknownTopologyLabel,
                  where + " names '" + r.topology_label + "'");
    }
    if (r.selected.empty()) throw Error(ErrorCode::kEmptySelected, where);
    if (r.selected.IntersectionSize(r.discarded) != 0) {
      throw Error(ErrorCode::kOverlappingSets,
                  where + " selects and discards the same path");
    }
    for (const PathSet* set : {&r.selected, &r.discarded}) {
      for (const Path& p : *set) {
        for (const NodeId& n : p.nodes()) {
          if (!it->second.HasNode(n)) {
            throw Error(ErrorCode::kUnknownEndpoint,
                        where + " path " + p.ToString() + " uses '" +
                            n.str() + "'");
          }
        }
      }
    }
  }
}

DemonstrationSet ParseDemonstrations(std::string_view document) {
  constexpr std::string_view kWhat = "corpus";
  Json doc = internal::ParseJson(document, kWhat);
  DemonstrationSet ds;
  if (auto it = doc.find("seed"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_integer()) {
      internal::SchemaError(kWhat, "'seed' must be an integer");
    }
    ds.seed = it->get<std::int64_t>();
  }
  const Json& topologies = internal::Field(doc, "topologies", kWhat);
  if (!topologies.is_array()) {
    internal::SchemaError(kWhat, "'topologies' must be an array");
  }
  for (const Json& t : topologies) {
    Topology topo = internal::TopologyFromJson(t);
    std::string label = topo.label();
    if (!ds.topologies.emplace(label, std::move(topo)).second) {
      internal::SchemaError(kWhat, "topology '" + label + "' defined twice");
    }
  }
  const Json& records = internal::Field(doc, "records", kWhat);
  if (!records.is_array()) {
    internal::SchemaError(kWhat, "'records' must be an array");
  }
  for (const Json& r : records) {
    PracticeRecord rec;
    rec.topology_label = internal::StringField(r, "topology", kWhat);
    for (auto [key, set] : {std::pair{"selected", &rec.selected},
                            std::pair{"discarded", &rec.discarded}}) {
      const Json& paths = internal::Field(r, key, kWhat);
      if (!paths.is_array()) {
        internal::SchemaError(kWhat, std::string("'") + key +
                                         "' must be an array of paths");
      }
      for (const Json& p : paths) set->Insert(internal::PathFrom(p, kWhat));
    }
    ds.records.push_back(std::move(rec));
  }
  ValidateDemonstrations(ds);
  return ds;
}

std::string SerializeDemonstrations(const DemonstrationSet& ds,
                                    std::string_view extra_json) {
  std::ostringstream out;
  out << "{\n";
  if (ds.seed) out << "  \"seed\": " << *ds.seed << ",\n";
  if (!extra_json.empty()) {
    out << "  \"run_config\": "
        << internal::ParseJson(extra_json, "run_config").dump() << ",\n";
  }
  out << "  \"topologies\": [\n";
  std::size_t i = 0;
  for (const auto& [label, t] : ds.topologies) {
    out << "    " << internal::TopologyToJson(t).dump()
        << (++i < ds.topologies.size() ? ",\n" : "\n");
  }
  out << "  ],\n  \"records\": [\n";
  for (std::size_t r = 0; r < ds.records.size(); ++r) {
    const PracticeRecord& rec = ds.records[r];
    Json j;
    j["topology"] = rec.topology_label;
    Json sel = Json::array();
    for (const Path& p : rec.selected) sel.push_back(internal::PathToJson(p));
    Json dis = Json::array();
    for (const Path& p : rec.discarded) dis.push_back(internal::PathToJson(p));
    j["selected"] = std::move(sel);
    j["discarded"] = std::move(dis);
    out << "    " << j.dump() << (r + 1 < ds.records.size() ? ",\n" : "\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

DiscardModes ClassifyAgainstPolicy(const Topology& t, const PolicySpec& policy,
                                   const PathSet& target, const Path& p) {
  DiscardModes m;
  PathFacts facts = PathPredicates(t, p);
  m.disconnected = !facts.is_connected;
  m.loopy = !facts.is_simple;
  if (!target.empty()) {
    const Path& ref = *target.begin();
    m.wrong_endpoints = p.front() != ref.front() || p.back() != ref.back();
    auto ref_weight = PathPredicates(t, ref).total_weight;
    m.non_shortest = facts.total_weight && ref_weight &&
                     *facts.total_weight > *ref_weight;
  }
  m.misses_via = policy.via.has_value() && !facts.Visits(*policy.via);
  return m;
}

namespace {

// Uniform single pick from a stream, reservoir style.
struct ReservoirPick {
  std::vector<int> chosen;
  std::uint64_t seen = 0;

  void Offer(std::span<const int> seq, Rng& rng) {
    ++seen;
    if (rng.Below(seen) == 0) chosen.assign(seq.begin(), seq.end());
  }
};

}  // namespace

DemonstrationSet GenerateDemonstrations(const Topology& t,
                                        const PolicySpec& policy,
                                        int n_records, std::int64_t seed) {
  if (n_records < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n_records must be >= 1");
  }
  if (policy.discard_sample_size < 0 || policy.retry_cap < 1 ||
      policy.max_hops < 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid policy settings");
  }
  int via_index = -1;
  if (policy.via) {
    via_index = t.IndexOf(*policy.via);
    if (via_index < 0) {
      throw Error(ErrorCode::kUnknownEndpoint,
                  "via node '" + policy.via->str() + "'");
    }
  }
  std::vector<int> endpoint_pool;
  for (int i = 0; i < static_cast<int>(t.nodes().size()); ++i) {
    if (i != via_index) endpoint_pool.push_back(i);
  }
  if (endpoint_pool.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "topology needs two endpoint-eligible nodes");
  }

  EnumerationLimits limits;
  limits.max_hops = policy.max_hops > 0
                        ? policy.max_hops
                        : std::max(1, static_cast<int>(t.nodes().size()) - 1);
  limits.candidate_ceiling = policy.candidate_ceiling;

  internal::IndexGraph g(t);
  Rng rng(static_cast<std::uint64_t>(seed));
  DemonstrationSet ds;
  ds.seed = seed;
  ds.topologies.emplace(t.label(), t);

  for (int r = 0; r < n_records; ++r) {
    int s = -1, d = -1;
    PathSet target;
    for (int attempt = 0; attempt < policy.retry_cap && target.empty();
         ++attempt) {
      s = endpoint_pool[rng.Below(endpoint_pool.size())];
      do {
        d = endpoint_pool[rng.Below(endpoint_pool.size())];
      } while (d == s);
      Intent intent;
      intent.start = t.nodes()[s];
      intent.dest = t.nodes()[d];
      if (policy.via) intent.via.push_back(*policy.via);
      target = OracleTargetSpace(t, intent, limits);
    }
    if (target.empty()) {
      throw Error(ErrorCode::kNoValidPath,
                  "no endpoint pair with a valid path after " +
                      std::to_string(policy.retry_cap) + " draws");
    }

    // One candidate per failure mode, drawn from the intent's own solution
    // space: disconnected, loopy, and connected-simple-but-heavier.
    Rational best = *PathPredicates(t, *target.begin()).total_weight;
    ReservoirPick disconnected, loopy, heavier;
    ForEachCandidate(
        t, t.nodes()[s], t.nodes()[d], limits, [&](std::span<const int> seq) {
          auto w = g.ConnectedWeight(seq);
          if (!w) {
            disconnected.Offer(seq, rng);
          } else if (!g.IsSimple(seq)) {
            loopy.Offer(seq, rng);
          } else if (via_index < 0 ||
                     internal::IndexGraph::Visits(seq, via_index)) {
            if (*w > best) heavier.Offer(seq, rng);
          }
        });

    PracticeRecord rec;
    rec.topology_label = t.label();
    rec.selected = target;
    const auto k = static_cast<std::size_t>(policy.discard_sample_size);
    for (ReservoirPick* pick : {&disconnected, &loopy, &heavier}) {
      if (rec.discarded.size() < k && !pick->chosen.empty()) {
        rec.discarded.Insert(g.ToPath(t, pick->chosen));
      }
    }

    // Fill the rest with sequences that break the whole policy at once:
    // disconnected, looping, on other endpoints and (if any) off the via
    // node. Fall back to anything that breaks the policy somewhere.
    const std::size_t attempts = 200 * std::max<std::size_t>(k, 1);
    for (int strict = 1; strict >= 0 && rec.discarded.size() < k; --strict) {
      for (std::size_t a = 0; a < attempts && rec.discarded.size() < k; ++a) {
        const int hops = static_cast<int>(rng.Between(1, limits.max_hops));
        std::vector<int> seq(static_cast<std::size_t>(hops) + 1);
        for (int& v : seq) v = static_cast<int>(rng.Below(t.nodes().size()));
        Path p = g.ToPath(t, seq);
        if (target.Contains(p) || rec.discarded.Contains(p)) continue;
        DiscardModes m = ClassifyAgainstPolicy(t, policy, target, p);
        bool accept = strict ? (m.disconnected && m.loopy &&
                                m.wrong_endpoints &&
                                (via_index < 0 || m.misses_via))
                             : m.Any();
        if (accept) rec.discarded.Insert(std::move(p));
      }
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

}  // namespace pathcause
