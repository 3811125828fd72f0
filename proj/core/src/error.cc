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

#include "pathcause/error.h"

namespace pathcause {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateLink: return "DuplicateLink";
    case ErrorCode::kEmptyNodeSet: return "EmptyNodeSet";
    case ErrorCode::kSpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::kUnknownTopologyLabel: return "UnknownTopologyLabel";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kEmptySelected: return "EmptySelected";
    case ErrorCode::kNoValidPath: return "NoValidPath";
    case ErrorCode::kNoApplicableRecords: return "NoApplicableRecords";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kConflictingEntities: return "ConflictingEntities";
    case ErrorCode::kMissingTemplate: return "MissingTemplate";
    case ErrorCode::kTooManyInstances: return "TooManyInstances";
    case ErrorCode::kTraceMismatch: return "TraceMismatch";
    case ErrorCode::kUnboundEntity: return "UnboundEntity";
    case ErrorCode::kEmptySolutionSpace: return "EmptySolutionSpace";
    case ErrorCode::kEmptyTarget: return "EmptyTarget";
    case ErrorCode::kInvalidPath: return "InvalidPath";
  }
  return "Unknown";
}

}  // namespace pathcause
