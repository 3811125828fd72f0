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

#include "pathcause/explain.h"

#include <sstream>

#include "json_util.h"
#include "pathcause/error.h"

namespace pathcause {

using internal::Json;

namespace {

bool UsesLink(const Path& p, const Link& l) {
  const auto& s = p.nodes();
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i - 1] == l.src && s[i] == l.dst) return true;
    if (!l.directed && s[i - 1] == l.dst && s[i] == l.src) return true;
  }
  return false;
}

bool AnyUses(const PathSet& set, const Link& l) {
  for (const Path& p : set) {
    if (UsesLink(p, l)) return true;
  }
  return false;
}

}  // namespace

Explanation Explain(const ExecutionTrace& trace, const Topology& t) {
  Explanation e;
  e.topology_label = trace.topology_label;
  e.intent = RenderIntent(trace.intent);
  e.chain = trace.structure.ChainString();
  e.posterior = trace.structure.posterior;
  e.solution_space_size = trace.solution_space.size();
  for (const FilterStep& step : trace.steps) {
    StepExplanation s;
    s.index = step.index;
    s.constraint = step.instance.ToString();
    s.description = step.instance.Describe();
    s.before = step.before.size();
    s.after = step.survivors.size();
    s.eliminated = step.eliminated;
    e.steps.push_back(std::move(s));
  }
  e.selected.assign(trace.final.begin(), trace.final.end());

  for (const Link& l : t.links()) {
    LinkExplanation le;
    le.src = l.src;
    le.dst = l.dst;
    le.on_selected_path = AnyUses(trace.final, l);
    if (!le.on_selected_path && AnyUses(trace.solution_space, l)) {
      for (const FilterStep& step : trace.steps) {
        if (!AnyUses(step.survivors, l)) {
          le.dropped_at_step = step.index;
          break;
        }
      }
    }
    e.links.push_back(std::move(le));
  }
  return e;
}

std::string RenderText(const Explanation& e, std::size_t max_samples) {
  std::ostringstream out;
  out << "Topology " << e.topology_label << ", intent: " << e.intent << "\n";
  out << "Causal knowledge structure: " << e.chain << " (posterior "
      << e.posterior << ")\n";
  out << "Solution space: " << e.solution_space_size << " candidate paths\n";

  for (const StepExplanation& s : e.steps) {
    out << "\nStep " << s.index + 1 << ": " << s.description << " ["
        << s.constraint << "]\n";
    out << "  " << s.before << " -> " << s.after << " candidates\n";
    if (s.eliminated.empty()) {
      out << "  no candidate was eliminated\n";
      continue;
    }
    out << "  eliminated " << s.eliminated.size() << ":\n";
    std::size_t shown = 0;
    for (const Elimination& el : s.eliminated) {
      if (shown == max_samples) break;
      out << "    " << el.path.ToString() << ": " << el.reason << "\n";
      ++shown;
    }
    if (s.eliminated.size() > shown) {
      out << "    ... and " << s.eliminated.size() - shown << " more\n";
    }
  }

  out << "\nSelected path(s):\n";
  if (e.selected.empty()) out << "  none\n";
  for (const Path& p : e.selected) out << "  " << p.ToString() << "\n";

  out << "\nLinks:\n";
  for (const LinkExplanation& l : e.links) {
    out << "  " << l.src.str() << "-" << l.dst.str() << ": ";
    if (l.on_selected_path) {
      out << "selected; its route survived every step";
      if (!e.steps.empty()) {
        out << " (";
        for (std::size_t i = 0; i < e.steps.size(); ++i) {
          out << (i ? ", " : "") << e.steps[i].description;
        }
        out << ")";
      }
    } else if (l.dropped_at_step) {
      const StepExplanation& s = e.steps.at(*l.dropped_at_step);
      out << "not selected; the last candidate using it fell at step "
          << s.index + 1 << " (" << s.description << ")";
    } else {
      out << "not selected; no candidate path uses it";
    }
    out << "\n";
  }
  return out.str();
}

std::string RenderMachine(const Explanation& e,
                          std::string_view run_config_json) {
  Json doc;
  doc["topology"] = e.topology_label;
  doc["intent"] = e.intent;
  doc["chain"] = e.chain;
  doc["posterior"] = e.posterior;
  doc["solution_space_size"] = e.solution_space_size;
  Json steps = Json::array();
  for (const StepExplanation& s : e.steps) {
    Json j;
    j["index"] = s.index;
    j["constraint"] = s.constraint;
    j["description"] = s.description;
    j["before"] = s.before;
    j["after"] = s.after;
    Json el = Json::array();
    for (const Elimination& x : s.eliminated) {
      el.push_back({{"path", internal::PathToJson(x.path)},
                    {"reason", x.reason}});
    }
    j["eliminated"] = std::move(el);
    steps.push_back(std::move(j));
  }
  doc["steps"] = std::move(steps);
  Json selected = Json::array();
  for (const Path& p : e.selected) selected.push_back(internal::PathToJson(p));
  doc["selected"] = std::move(selected);
  Json links = Json::array();
  for (const LinkExplanation& l : e.links) {
    Json j;
    j["src"] = l.src.str();
    j["dst"] = l.dst.str();
    j["on_selected_path"] = l.on_selected_path;
    j["dropped_at_step"] =
        l.dropped_at_step ? Json(*l.dropped_at_step) : Json(nullptr);
    links.push_back(std::move(j));
  }
  doc["links"] = std::move(links);
  internal::EmbedRunConfig(doc, run_config_json);
  return doc.dump(2) + "\n";
}

Explanation ParseMachine(std::string_view document) {
  constexpr std::string_view kWhat = "explanation";
  Json doc = internal::ParseJson(document, kWhat);
  Explanation e;
  try {
    e.topology_label = doc.at("topology").get<std::string>();
    e.intent = doc.at("intent").get<std::string>();
    e.chain = doc.at("chain").get<std::string>();
    e.posterior = doc.at("posterior").get<double>();
    e.solution_space_size = doc.at("solution_space_size").get<std::size_t>();
    for (const Json& j : doc.at("steps")) {
      StepExplanation s;
      s.index = j.at("index").get<std::size_t>();
      s.constraint = j.at("constraint").get<std::string>();
      s.description = j.at("description").get<std::string>();
      s.before = j.at("before").get<std::size_t>();
      s.after = j.at("after").get<std::size_t>();
      for (const Json& x : j.at("eliminated")) {
        s.eliminated.push_back({internal::PathFrom(x.at("path"), kWhat),
                                x.at("reason").get<std::string>()});
      }
      e.steps.push_back(std::move(s));
    }
    for (const Json& p : doc.at("selected")) {
      e.selected.push_back(internal::PathFrom(p, kWhat));
    }
    for (const Json& j : doc.at("links")) {
      LinkExplanation l;
      l.src = internal::NodeFrom(j.at("src"), kWhat);
      l.dst = internal::NodeFrom(j.at("dst"), kWhat);
      l.on_selected_path = j.at("on_selected_path").get<bool>();
      if (!j.at("dropped_at_step").is_null()) {
        l.dropped_at_step = j.at("dropped_at_step").get<std::size_t>();
      }
      e.links.push_back(std::move(l));
    }
  } catch (const Json::exception& ex) {
    internal::SchemaError(kWhat, ex.what());
  }
  return e;
}

}  // namespace pathcause
