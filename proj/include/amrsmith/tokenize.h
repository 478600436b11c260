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

// Character-level token sequences for a seq2seq model. Spaces become `+`,
// relations and POS tags can be single "super characters".

#ifndef AMRSMITH_TOKENIZE_H_
#define AMRSMITH_TOKENIZE_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrsmith/preprocess.h"

namespace amrsmith {

enum class TokenKind {
  kChar,        // one UTF-8 code point
  kSpace,       // `+`
  kRelation,    // `:ARG0`
  kPos,         // `VBP`
  kDepthParen,  // `*3*(`
  kEscape,      // `\+` or `\:` for a literal character
};

struct Token {
  TokenKind kind = TokenKind::kChar;
  std::string text;

  bool operator==(const Token &other) const = default;
};

using TokenSequence = std::vector<Token>;

struct AmrEncoding {
  bool super_relations = true;
  bool depth_parens = false;
};

// Encodes a single-line variable-free AMR. Relations and depth parentheses
// are only recognized outside quoted literals.
TokenSequence EncodeAmr(std::string_view line, const AmrEncoding &options = {});

// Encodes record.tokens separated by `+`. With `with_pos`, each token's tag
// follows its last character; empty tags are skipped. Throws
// Error(kMalformedEntry) if tags are missing or the wrong length.
TokenSequence EncodeSentence(const SentenceRecord &record, bool with_pos);

// Concatenation with `+` as space, depth parentheses as plain ones and
// escapes resolved. POS tokens are kept by DecodeAmr and dropped by
// DecodeSentence.
std::string DecodeAmr(const TokenSequence &tokens);
std::string DecodeSentence(const TokenSequence &tokens);

// One line of the model interchange format: texts joined by single spaces.
std::string JoinTokens(const TokenSequence &tokens);
// Inverse of JoinTokens; kinds are recovered from token shape.
TokenSequence SplitTokens(std::string_view line);

// Number of UTF-8 code points, counting stray bytes as one each.
std::size_t CodePointLength(std::string_view s);

class Vocab {
 public:
  void Add(const TokenSequence &tokens);
  std::size_t Count(const std::string &symbol) const;
  std::size_t size() const { return counts_.size(); }
  const std::map<std::string, std::size_t> &counts() const { return counts_; }
  // `symbol<TAB>count` lines, most frequent first.
  void Write(std::ostream &out) const;

 private:
  std::map<std::string, std::size_t> counts_;
};

// Reads `token<TAB>tag` lines with a blank line between sentences. A line
// without a tag gives an empty tag.
std::vector<std::vector<std::pair<std::string, std::string>>> ReadTagSidecar(
    std::istream &in);

}  // namespace amrsmith

#endif  // AMRSMITH_TOKENIZE_H_
