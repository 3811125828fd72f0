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

// Operator intents in a small formal language:
//
//   FIND PATH FROM <node> TO <node> (VIA <node>)* (AVOID <node>)*
//       (OBJECTIVE (SHORTEST|ANY))?
//
// Keywords are upper case; tokens are separated by whitespace.

#ifndef PATHCAUSE_INTENT_H_
#define PATHCAUSE_INTENT_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pathcause/error.h"
#include "pathcause/graph.h"

namespace pathcause {

enum class Objective { kShortest, kAny };

struct Intent {
  std::string source;
  NodeId start;
  NodeId dest;
  // Ordered, no duplicates.
  std::vector<NodeId> via;
  std::set<NodeId> avoid;
  Objective objective = Objective::kShortest;

  // Field equality; `source` is ignored.
  bool SameAs(const Intent& o) const {
    return start == o.start && dest == o.dest && via == o.via &&
           avoid == o.avoid && objective == o.objective;
  }
};

// Raised with ErrorCode::kSyntaxError; carries the byte offset of the
// offending token (text.size() when input ended early).
class IntentSyntaxError : public Error {
 public:
  IntentSyntaxError(std::size_t offset, const std::string& message)
      : Error(ErrorCode::kSyntaxError,
              "at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Errors: IntentSyntaxError, Error(kConflictingEntities) when start == dest,
// a node is both VIA and AVOID, an endpoint is avoided, or a VIA repeats.
Intent ParseIntent(std::string_view text);

// Canonical text. ParseIntent(RenderIntent(i)) is field-equal to i.
std::string RenderIntent(const Intent& intent);

// Batch documents hold one intent per line. Blank lines and lines whose
// first non-space character is '#' are skipped. Syntax error offsets are
// relative to the whole document.
std::vector<Intent> ParseIntentBatch(std::string_view document);

// Checks the cross-field invariants; ParseIntent calls this.
void ValidateIntent(const Intent& intent);

}  // namespace pathcause

#endif  // PATHCAUSE_INTENT_H_
