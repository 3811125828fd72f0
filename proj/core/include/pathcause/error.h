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

#ifndef PATHCAUSE_ERROR_H_
#define PATHCAUSE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathcause {

enum class ErrorCode {
  kInvalidArgument,
  kParseError,
  // graph-core
  kUnknownEndpoint,
  kSelfLoop,
  kDuplicateLink,
  kEmptyNodeSet,
  kSpaceTooLarge,
  // demo-data
  kUnknownTopologyLabel,
  kOverlappingSets,
  kEmptySelected,
  kNoValidPath,
  // constraint-miner
  kNoApplicableRecords,
  // intent
  kSyntaxError,
  kConflictingEntities,
  kMissingTemplate,
  // causal-structure
  kTooManyInstances,
  kTraceMismatch,
  // executor-explainer
  kUnboundEntity,
  kEmptySolutionSpace,
  kEmptyTarget,
  kInvalidPath,
};

std::string_view ErrorCodeName(ErrorCode code);

// All validation failures surface as this exception. Internal invariant
// breaches use std::logic_error instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pathcause

#endif  // PATHCAUSE_ERROR_H_
