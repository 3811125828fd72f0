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

// Topology documents:
//
//   {"label": "T1", "nodes": ["A", "B"],
//    "links": [{"src": "A", "dst": "B", "weight": 1, "directed": false}]}
//
// `weight` is a number or a fraction string such as "3/2" and defaults to 1;
// `directed` defaults to false.

#ifndef PATHCAUSE_TOPOLOGY_IO_H_
#define PATHCAUSE_TOPOLOGY_IO_H_

#include <string>
#include <string_view>

#include "pathcause/graph.h"

namespace pathcause {

// Errors: kParseError for malformed documents, then BuildTopology's errors.
Topology ParseTopology(std::string_view document);
std::string SerializeTopology(const Topology& t);

// Whole-file helpers shared by the loaders. ReadTextFile throws
// Error(kInvalidArgument) when the file cannot be opened.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace pathcause

#endif  // PATHCAUSE_TOPOLOGY_IO_H_
