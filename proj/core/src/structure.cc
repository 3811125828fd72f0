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

#include "pathcause/structure.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json_util.h"
#include "pathcause/error.h"

namespace pathcause {

using internal::Json;

void ArrangementPrior::Validate() const {
  if (!(feasibility_first_weight > 0.0) || !(scope_order_weight > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "prior weights must be > 0");
  }
}

namespace {

bool IsLocal(const ConstraintInstance& c) {
  return c.tmpl.scope() != ConstraintScope::kGlobal;
}

bool IsFeasibility(const ConstraintInstance& c) {
  return c.tmpl.category() == ConstraintCategory::kFeasibility;
}

double ScoreSum(const Arrangement& chain) {
  double s = 0.0;
  for (const auto& c : chain) s += c.score;
  return s;
}

// Negative when a sorts first, positive when b does, zero when identical.
int CompareChainIdentity(const Arrangement& a, const Arrangement& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::string la = a[i].KindLabel(), lb = b[i].KindLabel();
    if (la != lb) return la < lb ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].bindings != b[i].bindings) {
      return a[i].bindings < b[i].bindings ? -1 : 1;
    }
  }
  return 0;
}

bool Tied(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

}  // namespace

PriorComponents EvaluatePrior(const Arrangement& chain,
                              const ArrangementPrior& prior) {
  PriorComponents pc;
  bool seen_optimization = false;
  pc.feasibility_first = true;
  for (const auto& c : chain) {
    if (!IsFeasibility(c)) {
      seen_optimization = true;
    } else if (seen_optimization) {
      pc.feasibility_first = false;
    }
  }
  int mixed = 0, local_first = 0;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    bool a = IsLocal(chain[i]), b = IsLocal(chain[i + 1]);
    if (a == b) continue;
    ++mixed;
    if (a) ++local_first;
  }
  pc.scope_order = mixed > 0 ? static_cast<double>(local_first) / mixed : 0.0;
  pc.log_prior = prior.feasibility_first_weight * (pc.feasibility_first ? 1 : 0) +
                 prior.scope_order_weight * pc.scope_order;
  return pc;
}

double PositionalLogLikelihood(const Arrangement& chain) {
  double total = 0.0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    total += std::log(chain[i].score) / static_cast<double>(i + 1);
  }
  return total;
}

std::vector<PosteriorEntry> PosteriorOverArrangements(
    const std::vector<ConstraintInstance>& instances,
    const ArrangementPrior& prior) {
  prior.Validate();
  if (instances.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no instances to arrange");
  }
  if (instances.size() > kMaxArrangementInstances) {
    throw Error(ErrorCode::kTooManyInstances,
                std::to_string(instances.size()) + " instances exceed " +
                    std::to_string(kMaxArrangementInstances));
  }
  for (const auto& c : instances) {
    if (!(c.score > 0.0) || !std::isfinite(c.score)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "instance " + c.ToString() + " has non-positive score");
    }
  }

  std::vector<ConstraintInstance> sorted = instances;
  std::stable_sort(sorted.begin(), sorted.end(), ConstraintIdentityLess);
  std::vector<std::size_t> order(sorted.size());
  std::iota(order.begin(), order.end(), 0);

  std::vector<PosteriorEntry> entries;
  do {
    PosteriorEntry e;
    e.chain.reserve(order.size());
    for (std::size_t i : order) e.chain.push_back(sorted[i]);
    e.prior = EvaluatePrior(e.chain, prior);
    e.log_mass = e.prior.log_prior + PositionalLogLikelihood(e.chain);
    entries.push_back(std::move(e));
  } while (std::next_permutation(order.begin(), order.end()));

  double max_log = entries.front().log_mass;
  for (const auto& e : entries) max_log = std::max(max_log, e.log_mass);
  double z = 0.0;
  for (const auto& e : entries) z += std::exp(e.log_mass - max_log);
  for (auto& e : entries) e.probability = std::exp(e.log_mass - max_log) / z;
  return entries;
}

std::string CausalKnowledgeStructure::ChainString() const {
  std::string out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) out += " -> ";
    out += chain[i].ToString();
  }
  return out;
}

CausalKnowledgeStructure MapStructure(
    const std::vector<PosteriorEntry>& posterior,
    const ArrangementPrior& prior) {
  if (posterior.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty posterior");
  }
  auto better = [](const PosteriorEntry& a, const PosteriorEntry& b) {
    if (!Tied(a.probability, b.probability)) {
      return a.probability > b.probability;
    }
    double sa = ScoreSum(a.chain), sb = ScoreSum(b.chain);
    if (!Tied(sa, sb)) return sa > sb;
    return CompareChainIdentity(a.chain, b.chain) < 0;
  };
  const PosteriorEntry* best = &posterior.front();
  for (const auto& e : posterior) {
    if (better(e, *best)) best = &e;
  }
  CausalKnowledgeStructure s;
  s.chain = best->chain;
  s.posterior = best->probability;
  s.prior = best->prior;
  s.prior_weights = prior;
  return s;
}

std::string SerializeStructure(const CausalKnowledgeStructure& s,
                               std::string_view run_config_json) {
  Json doc;
  Json chain = Json::array();
  for (const auto& c : s.chain) {
    Json j;
    j["kind"] = c.KindLabel();
    Json b = Json::object();
    for (const auto& [k, v] : c.bindings) b[k] = v.str();
    j["bindings"] = std::move(b);
    j["score"] = c.score;
    chain.push_back(std::move(j));
  }
  doc["chain"] = std::move(chain);
  doc["posterior"] = s.posterior;
  doc["provenance"] = {
      {"prior_weights",
       {{"feasibility_first_weight", s.prior_weights.feasibility_first_weight},
        {"scope_order_weight", s.prior_weights.scope_order_weight}}},
      {"feasibility_first", s.prior.feasibility_first},
      {"scope_order", s.prior.scope_order},
      {"log_prior", s.prior.log_prior}};
  internal::EmbedRunConfig(doc, run_config_json);
  return doc.dump(2) + "\n";
}

CausalKnowledgeStructure ParseStructure(std::string_view document) {
  constexpr std::string_view kWhat = "structure";
  Json doc = internal::ParseJson(document, kWhat);
  CausalKnowledgeStructure s;
  const Json& chain = internal::Field(doc, "chain", kWhat);
  if (!chain.is_array() || chain.empty()) {
    internal::SchemaError(kWhat, "'chain' must be a non-empty array");
  }
  for (const Json& j : chain) {
    std::string label = internal::StringField(j, "kind", kWhat);
    bool exclude = label == "AvoidNode";
    ConstraintKind kind =
        exclude ? ConstraintKind::kFixedNode : KindFromName(label);
    std::map<std::string, NodeId> bindings;
    if (auto b = j.find("bindings"); b != j.end()) {
      if (!b->is_object()) internal::SchemaError(kWhat, "bad bindings");
      for (const auto& [k, v] : b->items()) {
        bindings.emplace(k, internal::NodeFrom(v, kWhat));
      }
    }
    double score = 1.0;
    if (auto sc = j.find("score"); sc != j.end()) {
      if (!sc->is_number()) internal::SchemaError(kWhat, "bad score");
      score = sc->get<double>();
    }
    try {
      s.chain.push_back(MakeInstance(kind, std::move(bindings), score, exclude));
    } catch (const Error& e) {
      internal::SchemaError(kWhat, e.what());
    }
  }
  if (auto p = doc.find("posterior"); p != doc.end() && p->is_number()) {
    s.posterior = p->get<double>();
  }
  if (auto prov = doc.find("provenance"); prov != doc.end()) {
    if (auto w = prov->find("prior_weights"); w != prov->end()) {
      s.prior_weights.feasibility_first_weight =
          w->value("feasibility_first_weight", 4.0);
      s.prior_weights.scope_order_weight = w->value("scope_order_weight", 2.0);
    }
  }
  s.prior = EvaluatePrior(s.chain, s.prior_weights);
  return s;
}

}  // namespace pathcause
