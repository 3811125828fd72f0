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

// Shared helpers for the JSON document readers and writers.

#ifndef PATHCAUSE_SRC_JSON_UTIL_H_
#define PATHCAUSE_SRC_JSON_UTIL_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "pathcause/error.h"
#include "pathcause/graph.h"

namespace pathcause::internal {

using Json = nlohmann::ordered_json;

inline Json ParseJson(std::string_view text, std::string_view what) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string(what) + ": " + std::string(e.what()));
  }
}

[[noreturn]] inline void SchemaError(std::string_view what,
                                     std::string_view detail) {
  throw Error(ErrorCode::kParseError,
              std::string(what) + ": " + std::string(detail));
}

inline const Json& Field(const Json& obj, const char* key,
                         std::string_view what) {
  if (!obj.is_object()) SchemaError(what, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) SchemaError(what, std::string("missing '") + key + "'");
  return *it;
}

inline std::string StringField(const Json& obj, const char* key,
                               std::string_view what) {
  const Json& v = Field(obj, key, what);
  if (!v.is_string()) SchemaError(what, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

inline NodeId NodeFrom(const Json& v, std::string_view what) {
  if (!v.is_string() || !NodeId::IsValidName(v.get<std::string>())) {
    SchemaError(what, "invalid node name " + v.dump());
  }
  return NodeId(v.get<std::string>());
}

inline Path PathFrom(const Json& v, std::string_view what) {
  if (!v.is_array() || v.empty()) {
    SchemaError(what, "a path must be a non-empty array of node names");
  }
  std::vector<NodeId> nodes;
  nodes.reserve(v.size());
  for (const Json& n : v) nodes.push_back(NodeFrom(n, what));
  return Path(std::move(nodes));
}

inline Json PathToJson(const Path& p) {
  Json arr = Json::array();
  for (const NodeId& n : p.nodes()) arr.push_back(n.str());
  return arr;
}

inline Rational RationalFrom(const Json& v, std::string_view what) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_number_float()) return Rational::Parse(v.dump());
  if (v.is_string()) return Rational::Parse(v.get<std::string>());
  SchemaError(what, "expected a number or fraction string, got " + v.dump());
}

inline Json RationalToJson(const Rational& r) {
  if (r.den() == 1) return Json(r.num());
  return Json(r.ToString());
}

// Adds "run_config" when `run_config_json` is non-empty.
inline void EmbedRunConfig(Json& doc, std::string_view run_config_json) {
  if (run_config_json.empty()) return;
  doc["run_config"] = ParseJson(run_config_json, "run_config");
}

// Defined in topology_io.cc.
Topology TopologyFromJson(const Json& doc);
Json TopologyToJson(const Topology& t);

}  // namespace pathcause::internal

#endif  // PATHCAUSE_SRC_JSON_UTIL_H_
