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

#include "pathcause/intent.h"

#include <algorithm>
#include <optional>

namespace pathcause {
namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    tokens.push_back({text.substr(start, i - start), start});
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text)
      : text_(text), tokens_(Tokenize(text)) {}

  Intent Parse() {
    Intent intent;
    intent.source = std::string(text_);
    Expect("FIND");
    Expect("PATH");
    Expect("FROM");
    intent.start = Node();
    Expect("TO");
    intent.dest = Node();
    while (Accept("VIA")) {
      NodeId n = Node();
      if (std::find(intent.via.begin(), intent.via.end(), n) !=
          intent.via.end()) {
        throw Error(ErrorCode::kConflictingEntities,
                    "VIA " + n.str() + " repeated");
      }
      intent.via.push_back(std::move(n));
    }
    while (Accept("AVOID")) intent.avoid.insert(Node());
    if (Accept("OBJECTIVE")) {
      if (Accept("SHORTEST")) {
        intent.objective = Objective::kShortest;
      } else if (Accept("ANY")) {
        intent.objective = Objective::kAny;
      } else {
        Fail("expected SHORTEST or ANY");
      }
    }
    if (pos_ < tokens_.size()) {
      Fail("unexpected '" + std::string(tokens_[pos_].text) + "'");
    }
    ValidateIntent(intent);
    return intent;
  }

 private:
  std::size_t Offset() const {
    return pos_ < tokens_.size() ? tokens_[pos_].offset : text_.size();
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw IntentSyntaxError(Offset(), message);
  }

  bool Accept(std::string_view keyword) {
    if (pos_ < tokens_.size() && tokens_[pos_].text == keyword) {
      ++pos_;
      return true;
    }
    return false;
  }

  void Expect(std::string_view keyword) {
    if (!Accept(keyword)) Fail("expected " + std::string(keyword));
  }

  NodeId Node() {
    if (pos_ >= tokens_.size()) Fail("expected a node name");
    const Token& tok = tokens_[pos_];
    if (!NodeId::IsValidName(tok.text) || IsKeyword(tok.text)) {
      Fail("'" + std::string(tok.text) + "' is not a node name");
    }
    ++pos_;
    return NodeId(std::string(tok.text));
  }

  static bool IsKeyword(std::string_view word) {
    static constexpr std::string_view kKeywords[] = {
        "FIND", "PATH", "FROM",      "TO",       "VIA",
        "AVOID", "OBJECTIVE", "SHORTEST", "ANY"};
    return std::find(std::begin(kKeywords), std::end(kKeywords), word) !=
           std::end(kKeywords);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

void ValidateIntent(const Intent& intent) {
  if (intent.start == intent.dest) {
    throw Error(ErrorCode::kConflictingEntities,
                "start and destination are both " + intent.start.str());
  }
  for (const NodeId& v : intent.via) {
    if (intent.avoid.count(v)) {
      throw Error(ErrorCode::kConflictingEntities,
                  v.str() + " is both VIA and AVOID");
    }
  }
  if (intent.avoid.count(intent.start) || intent.avoid.count(intent.dest)) {
    throw Error(ErrorCode::kConflictingEntities, "an endpoint is avoided");
  }
  std::vector<NodeId> via = intent.via;
  std::sort(via.begin(), via.end());
  if (std::adjacent_find(via.begin(), via.end()) != via.end()) {
    throw Error(ErrorCode::kConflictingEntities, "repeated VIA node");
  }
}

Intent ParseIntent(std::string_view text) { return Parser(text).Parse(); }

std::vector<Intent> ParseIntentBatch(std::string_view document) {
  std::vector<Intent> out;
  std::size_t line_start = 0;
  while (line_start < document.size()) {
    std::size_t end = document.find('\n', line_start);
    if (end == std::string_view::npos) end = document.size();
    std::string_view line = document.substr(line_start, end - line_start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      std::size_t last = line.find_last_not_of(" \t\r");
      try {
        out.push_back(ParseIntent(line.substr(0, last + 1)));
      } catch (const IntentSyntaxError& e) {
        throw IntentSyntaxError(line_start + e.offset(),
                                "in intent starting at byte " +
                                    std::to_string(line_start) + ": " +
                                    e.what());
      }
    }
    line_start = end + 1;
  }
  return out;
}

std::string RenderIntent(const Intent& intent) {
  std::string out = "FIND PATH FROM " + intent.start.str() + " TO " +
                    intent.dest.str();
  for (const NodeId& v : intent.via) out += " VIA " + v.str();
  for (const NodeId& a : intent.avoid) out += " AVOID " + a.str();
  out += intent.objective == Objective::kShortest ? " OBJECTIVE SHORTEST"
                                                  : " OBJECTIVE ANY";
  return out;
}

}  // namespace pathcause
