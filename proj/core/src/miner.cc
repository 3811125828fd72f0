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

#include "pathcause/miner.h"

#include <algorithm>
#include <future>
#include <set>

#include "json_util.h"
#include "pathcause/error.h"

namespace pathcause {

using internal::Json;

double LikelihoodModel::p_sel() const {
  return (static_cast<double>(sel_sat) + smoothing) /
         (static_cast<double>(sel_tot) + 2.0 * smoothing);
}

double LikelihoodModel::p_dis() const {
  return (static_cast<double>(dis_sat) + smoothing) /
         (static_cast<double>(dis_tot) + 2.0 * smoothing);
}

std::size_t PhenomenonCandidate::RecordCount() const {
  std::set<std::size_t> records;
  for (const Evidence& e : evidence) records.insert(e.record);
  return records.size();
}

const PhenomenonCandidate* PhenomenonReport::Find(ConstraintKind kind) const {
  for (const auto& c : candidates) {
    if (c.tmpl.kind() == kind) return &c;
  }
  return nullptr;
}

void PhenomenonReport::Merge(PhenomenonReport other) {
  for (auto& c : other.candidates) candidates.push_back(std::move(c));
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) {
                     return a.tmpl.name() < b.tmpl.name();
                   });
}

std::optional<std::pair<NodeId, NodeId>> RecordEndpoints(
    const PracticeRecord& r) {
  std::optional<std::pair<NodeId, NodeId>> ends;
  for (const Path& p : r.selected) {
    auto e = std::make_pair(p.front(), p.back());
    if (ends && *ends != e) return std::nullopt;
    ends = e;
  }
  return ends;
}

namespace {

// Interior nodes shared by every selected path, paired with how many
// discards miss them; only nodes some discard misses are kept.
std::vector<std::pair<NodeId, std::size_t>> FixedNodeWitnesses(
    const Topology& t, const PracticeRecord& r) {
  std::set<NodeId> common;
  std::set<NodeId> ends;
  bool first = true;
  for (const Path& p : r.selected) {
    PathFacts f = PathPredicates(t, p);
    ends.insert(p.front());
    ends.insert(p.back());
    if (first) {
      common = f.visited;
      first = false;
      continue;
    }
    std::set<NodeId> keep;
    std::set_intersection(common.begin(), common.end(), f.visited.begin(),
                          f.visited.end(), std::inserter(keep, keep.end()));
    common = std::move(keep);
  }
  std::vector<std::pair<NodeId, std::size_t>> out;
  for (const NodeId& n : common) {
    if (ends.count(n)) continue;
    std::size_t missing = 0;
    for (const Path& d : r.discarded) {
      if (!PathPredicates(t, d).Visits(n)) ++missing;
    }
    if (missing > 0) out.emplace_back(n, missing);
  }
  return out;
}

// Minimal weight among the record's connected simple paths on `ends`.
std::optional<Rational> RecordShortestWeight(
    const Topology& t, const PracticeRecord& r,
    const std::pair<NodeId, NodeId>& ends) {
  std::optional<Rational> best;
  for (const PathSet* set : {&r.selected, &r.discarded}) {
    for (const Path& p : *set) {
      if (p.front() != ends.first || p.back() != ends.second) continue;
      PathFacts f = PathPredicates(t, p);
      if (!f.is_connected || !f.is_simple) continue;
      if (!best || *f.total_weight < *best) best = f.total_weight;
    }
  }
  return best;
}

std::map<std::string, NodeId> EndpointBindings(
    const std::optional<std::pair<NodeId, NodeId>>& ends) {
  if (!ends) return {};
  return {{"start", ends->first}, {"dest", ends->second}};
}

void RequireRecords(const DemonstrationSet& ds) {
  if (ds.records.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty demonstration set");
  }
}

}  // namespace

PhenomenonReport DetectPointPhenomena(const DemonstrationSet& ds) {
  RequireRecords(ds);
  PhenomenonCandidate fixed{ConstraintTemplate(ConstraintKind::kFixedNode), {}};
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const PracticeRecord& r = ds.records[i];
    for (const auto& [node, missing] :
         FixedNodeWitnesses(ds.TopologyFor(r), r)) {
      fixed.evidence.push_back({i, {{"node", node}}});
    }
  }
  PhenomenonReport report;
  if (!fixed.evidence.empty()) report.candidates.push_back(std::move(fixed));
  return report;
}

PhenomenonReport DetectAdjacentPhenomena(const DemonstrationSet& ds) {
  RequireRecords(ds);
  PhenomenonCandidate conn{ConstraintTemplate(ConstraintKind::kConnectivity),
                           {}};
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const PracticeRecord& r = ds.records[i];
    const Topology& t = ds.TopologyFor(r);
    bool selected_ok = std::all_of(
        r.selected.begin(), r.selected.end(),
        [&](const Path& p) { return PathPredicates(t, p).is_connected; });
    bool some_discard_broken = std::any_of(
        r.discarded.begin(), r.discarded.end(),
        [&](const Path& p) { return !PathPredicates(t, p).is_connected; });
    if (selected_ok && some_discard_broken) conn.evidence.push_back({i, {}});
  }
  PhenomenonReport report;
  report.candidates.push_back(std::move(conn));
  return report;
}

PhenomenonReport DetectGlobalPhenomena(const DemonstrationSet& ds) {
  RequireRecords(ds);
  PhenomenonCandidate loop_free{ConstraintTemplate(ConstraintKind::kLoopFree),
                                {}};
  PhenomenonCandidate shortest{ConstraintTemplate(ConstraintKind::kShortest),
                               {}};
  PhenomenonCandidate endpoints{ConstraintTemplate(ConstraintKind::kEndpoints),
                                {}};
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    const PracticeRecord& r = ds.records[i];
    const Topology& t = ds.TopologyFor(r);

    bool selected_simple = std::all_of(
        r.selected.begin(), r.selected.end(),
        [&](const Path& p) { return PathPredicates(t, p).is_simple; });
    bool discard_loops = std::any_of(
        r.discarded.begin(), r.discarded.end(),
        [&](const Path& p) { return !PathPredicates(t, p).is_simple; });
    if (selected_simple && discard_loops) loop_free.evidence.push_back({i, {}});

    auto ends = RecordEndpoints(r);
    if (!ends) continue;
    if (std::any_of(r.discarded.begin(), r.discarded.end(),
                    [&](const Path& p) {
                      return p.front() != ends->first ||
                             p.back() != ends->second;
                    })) {
      endpoints.evidence.push_back({i, EndpointBindings(ends)});
    }

    auto best = RecordShortestWeight(t, r, *ends);
    if (!best) continue;
    bool selected_minimal =
        std::all_of(r.selected.begin(), r.selected.end(), [&](const Path& p) {
          auto w = PathPredicates(t, p).total_weight;
          return w && *w == *best;
        });
    bool discard_heavier =
        std::any_of(r.discarded.begin(), r.discarded.end(), [&](const Path& p) {
          if (p.front() != ends->first || p.back() != ends->second) {
            return false;
          }
          PathFacts f = PathPredicates(t, p);
          return f.is_connected && f.is_simple && *f.total_weight > *best;
        });
    if (selected_minimal && discard_heavier) {
      shortest.evidence.push_back({i, {}});
    }
  }
  PhenomenonReport report;
  report.candidates.push_back(std::move(endpoints));
  report.candidates.push_back(std::move(loop_free));
  report.candidates.push_back(std::move(shortest));
  return report;
}

std::optional<RecordBinding> BindOnRecord(ConstraintKind kind,
                                          const DemonstrationSet& ds,
                                          std::size_t record) {
  const PracticeRecord& r = ds.records.at(record);
  const Topology& t = ds.TopologyFor(r);
  switch (kind) {
    case ConstraintKind::kConnectivity:
    case ConstraintKind::kLoopFree:
      return RecordBinding{};
    case ConstraintKind::kEndpoints: {
      auto ends = RecordEndpoints(r);
      if (!ends) return std::nullopt;
      return RecordBinding{EndpointBindings(ends), std::nullopt};
    }
    case ConstraintKind::kFixedNode: {
      auto witnesses = FixedNodeWitnesses(t, r);
      if (witnesses.empty()) return std::nullopt;
      // Witnesses come sorted by name, so max_element keeps the smallest
      // name among equals.
      auto best = std::max_element(
          witnesses.begin(), witnesses.end(),
          [](const auto& a, const auto& b) { return a.second < b.second; });
      return RecordBinding{{{"node", best->first}}, std::nullopt};
    }
    case ConstraintKind::kShortest: {
      auto ends = RecordEndpoints(r);
      if (!ends) return std::nullopt;
      auto best = RecordShortestWeight(t, r, *ends);
      if (!best) return std::nullopt;
      return RecordBinding{{}, best};
    }
  }
  return std::nullopt;
}

LikelihoodModel EstimateLikelihood(const ConstraintTemplate& tmpl,
                                   const DemonstrationSet& ds,
                                   double smoothing) {
  if (!(smoothing > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "smoothing must be > 0");
  }
  LikelihoodModel model;
  model.tmpl = tmpl;
  model.smoothing = smoothing;
  bool any = false;
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    auto binding = BindOnRecord(tmpl.kind(), ds, i);
    if (!binding) continue;
    any = true;
    const PracticeRecord& r = ds.records[i];
    const Topology& t = ds.TopologyFor(r);
    ConstraintInstance c = MakeInstance(tmpl.kind(), binding->bindings);
    for (const Path& p : r.selected) {
      ++model.sel_tot;
      if (Satisfies(c, t, p, binding->shortest_reference)) ++model.sel_sat;
    }
    for (const Path& p : r.discarded) {
      ++model.dis_tot;
      if (Satisfies(c, t, p, binding->shortest_reference)) ++model.dis_sat;
    }
  }
  if (!any) {
    throw Error(ErrorCode::kNoApplicableRecords,
                std::string(tmpl.name()) + " binds on no record");
  }
  return model;
}

std::vector<LikelihoodModel> Mine(const DemonstrationSet& ds, double tau,
                                  double smoothing) {
  RequireRecords(ds);
  if (!(tau > 0.0 && tau < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0, 1)");
  }
  auto point = std::async(std::launch::async, DetectPointPhenomena,
                          std::cref(ds));
  auto adjacent = std::async(std::launch::async, DetectAdjacentPhenomena,
                             std::cref(ds));
  PhenomenonReport report = DetectGlobalPhenomena(ds);
  report.Merge(point.get());
  report.Merge(adjacent.get());

  std::vector<LikelihoodModel> kept;
  for (const PhenomenonCandidate& c : report.candidates) {
    LikelihoodModel m;
    try {
      m = EstimateLikelihood(c.tmpl, ds, smoothing);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kNoApplicableRecords) continue;
      throw;
    }
    if (m.score() >= tau) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    if (a.score() != b.score()) return a.score() > b.score();
    return a.tmpl.name() < b.tmpl.name();
  });
  return kept;
}

std::string SerializeLibrary(const std::vector<LikelihoodModel>& library,
                             std::string_view run_config_json) {
  Json doc;
  Json templates = Json::array();
  for (const LikelihoodModel& m : library) {
    Json j;
    j["kind"] = m.tmpl.name();
    j["placeholders"] = m.tmpl.placeholders();
    j["scope"] = ScopeName(m.tmpl.scope());
    j["category"] = CategoryName(m.tmpl.category());
    j["counts"] = {{"sel_sat", m.sel_sat},
                   {"sel_tot", m.sel_tot},
                   {"dis_sat", m.dis_sat},
                   {"dis_tot", m.dis_tot}};
    j["smoothing"] = m.smoothing;
    j["score"] = m.score();
    templates.push_back(std::move(j));
  }
  doc["templates"] = std::move(templates);
  internal::EmbedRunConfig(doc, run_config_json);
  return doc.dump(2) + "\n";
}

std::vector<LikelihoodModel> ParseLibrary(std::string_view document) {
  constexpr std::string_view kWhat = "template library";
  Json doc = internal::ParseJson(document, kWhat);
  const Json& templates = internal::Field(doc, "templates", kWhat);
  if (!templates.is_array()) {
    internal::SchemaError(kWhat, "'templates' must be an array");
  }
  std::vector<LikelihoodModel> out;
  std::set<ConstraintKind> seen;
  for (const Json& j : templates) {
    LikelihoodModel m;
    m.tmpl = ConstraintTemplate(
        KindFromName(internal::StringField(j, "kind", kWhat)));
    if (!seen.insert(m.tmpl.kind()).second) {
      internal::SchemaError(kWhat, "duplicate kind " +
                                       std::string(m.tmpl.name()));
    }
    const Json& counts = internal::Field(j, "counts", kWhat);
    auto count = [&](const char* key) {
      const Json& v = internal::Field(counts, key, kWhat);
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        internal::SchemaError(kWhat, std::string(key) +
                                         " must be a non-negative integer");
      }
      return v.get<std::int64_t>();
    };
    m.sel_sat = count("sel_sat");
    m.sel_tot = count("sel_tot");
    m.dis_sat = count("dis_sat");
    m.dis_tot = count("dis_tot");
    if (m.sel_sat > m.sel_tot || m.dis_sat > m.dis_tot) {
      internal::SchemaError(kWhat, "satisfied count exceeds total");
    }
    if (auto s = j.find("smoothing"); s != j.end()) {
      if (!s->is_number() || !(s->get<double>() > 0.0)) {
        internal::SchemaError(kWhat, "smoothing must be a positive number");
      }
      m.smoothing = s->get<double>();
    }
    out.push_back(m);
  }
  return out;
}

const LikelihoodModel* FindModel(const std::vector<LikelihoodModel>& library,
                                 ConstraintKind kind) {
  for (const auto& m : library) {
    if (m.tmpl.kind() == kind) return &m;
  }
  return nullptr;
}

}  // namespace pathcause
