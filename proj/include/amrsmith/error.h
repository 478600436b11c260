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

#ifndef AMRSMITH_ERROR_H_
#define AMRSMITH_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace amrsmith {

enum class ErrorCode {
  kUnbalancedParens,
  kDuplicateVariableDefinition,
  kDanglingRelation,
  kUndefinedVariableReference,
  kSyntax,
  kTooLarge,
  kLengthMismatch,
  kEmptyCorpus,
  kMalformedEntry,
  kGazetteerUnavailable,
  kInsufficientCandidates,
  kAlignmentMismatch,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base class for every error raised by the library. Data errors carry a code
// so callers (and the CLI exit status) can tell them apart.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error in AMR text with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string &message, int line, int column);

  int line() const { return line_; }
  int column() const { return column_; }
  // Message without the position prefix.
  const std::string &detail() const { return detail_; }

 private:
  int line_;
  int column_;
  std::string detail_;
};

}  // namespace amrsmith

#endif  // AMRSMITH_ERROR_H_
