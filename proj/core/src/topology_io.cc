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

#include "pathcause/topology_io.h"

#include <fstream>
#include <sstream>

#include "json_util.h"

namespace pathcause {

using internal::Json;

namespace internal {

Topology TopologyFromJson(const Json& doc) {
  constexpr std::string_view kWhat = "topology";
  std::string label = StringField(doc, "label", kWhat);
  const Json& nodes_json = Field(doc, "nodes", kWhat);
  if (!nodes_json.is_array()) SchemaError(kWhat, "'nodes' must be an array");
  std::vector<NodeId> nodes;
  for (const Json& n : nodes_json) nodes.push_back(NodeFrom(n, kWhat));

  std::vector<Link> links;
  if (auto it = doc.find("links"); it != doc.end()) {
    if (!it->is_array()) SchemaError(kWhat, "'links' must be an array");
    for (const Json& l : *it) {
      Link link;
      link.src = NodeFrom(Field(l, "src", kWhat), kWhat);
      link.dst = NodeFrom(Field(l, "dst", kWhat), kWhat);
      if (auto w = l.find("weight"); w != l.end()) {
        link.weight = RationalFrom(*w, kWhat);
      }
      if (auto d = l.find("directed"); d != l.end()) {
        if (!d->is_boolean()) SchemaError(kWhat, "'directed' must be boolean");
        link.directed = d->get<bool>();
      }
      links.push_back(std::move(link));
    }
  }
  return BuildTopology(std::move(label), std::move(nodes), std::move(links));
}

Json TopologyToJson(const Topology& t) {
  Json doc;
  doc["label"] = t.label();
  Json nodes = Json::array();
  for (const NodeId& n : t.nodes()) nodes.push_back(n.str());
  doc["nodes"] = std::move(nodes);
  Json links = Json::array();
  for (const Link& l : t.links()) {
    Json j;
    j["src"] = l.src.str();
    j["dst"] = l.dst.str();
    j["weight"] = RationalToJson(l.weight);
    j["directed"] = l.directed;
    links.push_back(std::move(j));
  }
  doc["links"] = std::move(links);
  return doc;
}

}  // namespace internal

Topology ParseTopology(std::string_view document) {
  return internal::TopologyFromJson(internal::ParseJson(document, "topology"));
}

std::string SerializeTopology(const Topology& t) {
  return internal::TopologyToJson(t).dump(2) + "\n";
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace pathcause
