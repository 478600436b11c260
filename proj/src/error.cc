// Copyright 2026 The amrsmith Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "amrsmith/error.h"

namespace amrsmith {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedParens: return "UnbalancedParens";
    case ErrorCode::kDuplicateVariableDefinition:
      return "DuplicateVariableDefinition";
    case ErrorCode::kDanglingRelation: return "DanglingRelation";
    case ErrorCode::kUndefinedVariableReference:
      return "UndefinedVariableReference";
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kMalformedEntry: return "MalformedEntry";
    case ErrorCode::kGazetteerUnavailable: return "GazetteerUnavailable";
    case ErrorCode::kInsufficientCandidates: return "InsufficientCandidates";
    case ErrorCode::kAlignmentMismatch: return "AlignmentMismatch";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

ParseError::ParseError(ErrorCode code, const std::string &message, int line,
                       int column)
    : Error(code, std::string(ErrorCodeName(code)) + " at " +
                      std::to_string(line) + ":" + std::to_string(column) +
                      ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

}  // namespace amrsmith
