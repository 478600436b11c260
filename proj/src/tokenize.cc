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

#include "amrsmith/tokenize.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "amrsmith/error.h"

namespace amrsmith {

namespace {

std::size_t CodePointWidth(std::string_view s, std::size_t i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  std::size_t width = 1;
  if (lead >= 0xF0 && lead < 0xF8) {
    width = 4;
  } else if (lead >= 0xE0) {
    width = lead < 0xF0 ? 3 : 1;
  } else if (lead >= 0xC0) {
    width = 2;
  }
  if (i + width > s.size()) return 1;
  for (std::size_t k = 1; k < width; ++k) {
    if ((static_cast<unsigned char>(s[i + k]) & 0xC0) != 0x80) return 1;
  }
  return width;
}

bool IsRelationChar(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
         (c >= '0' && c <= '9') || c == '-';
}

bool IsDepthParen(std::string_view t) {
  if (t.size() < 4 || t[0] != '*' || (t.back() != '(' && t.back() != ')')) {
    return false;
  }
  if (t[t.size() - 2] != '*') return false;
  std::string_view digits = t.substr(1, t.size() - 3);
  return !digits.empty() &&
         std::all_of(digits.begin(), digits.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Appends the characters of `text` one code point at a time.
void PushChars(std::string_view text, TokenSequence *out) {
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t w = CodePointWidth(text, i);
    if (IsSeparator(text[i])) {
      out->push_back({TokenKind::kSpace, "+"});
    } else if (text[i] == '+') {
      out->push_back({TokenKind::kEscape, "\\+"});
    } else {
      out->push_back({TokenKind::kChar, std::string(text.substr(i, w))});
    }
    i += w;
  }
}

std::string Decode(const TokenSequence &tokens, bool keep_pos) {
  std::string out;
  for (const Token &t : tokens) {
    switch (t.kind) {
      case TokenKind::kSpace:
        out += ' ';
        break;
      case TokenKind::kEscape:
        out += t.text.substr(1);
        break;
      case TokenKind::kDepthParen:
        out += t.text.back();
        break;
      case TokenKind::kPos:
        if (keep_pos) out += t.text;
        break;
      case TokenKind::kChar:
      case TokenKind::kRelation:
        out += t.text;
        break;
    }
  }
  return out;
}

}  // namespace

std::size_t CodePointLength(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += CodePointWidth(s, i)) ++n;
  return n;
}

TokenSequence EncodeAmr(std::string_view line, const AmrEncoding &options) {
  TokenSequence out;
  bool quoted = false;
  int depth = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (quoted) {
      if (c == '\\' && i + 1 < line.size()) {
        out.push_back({TokenKind::kChar, "\\"});
        ++i;
        if (line[i] == '"') {
          out.push_back({TokenKind::kChar, "\""});
          ++i;
          continue;
        }
      } else if (c == '"') {
        quoted = false;
        out.push_back({TokenKind::kChar, "\""});
        ++i;
        continue;
      }
      if (options.super_relations && line[i] == ':') {
        out.push_back({TokenKind::kEscape, "\\:"});
        ++i;
        continue;
      }
      std::size_t w = CodePointWidth(line, i);
      PushChars(line.substr(i, w), &out);
      i += w;
      continue;
    }
    if (c == '"') {
      quoted = true;
      out.push_back({TokenKind::kChar, "\""});
      ++i;
    } else if (options.super_relations && c == ':') {
      std::size_t end = i + 1;
      while (end < line.size() && IsRelationChar(line[end])) ++end;
      if (end > i + 1) {
        out.push_back({TokenKind::kRelation, std::string(line.substr(i, end - i))});
      } else {
        out.push_back({TokenKind::kEscape, "\\:"});
      }
      i = end;
    } else if (options.depth_parens && c == '(') {
      ++depth;
      out.push_back({TokenKind::kDepthParen, "*" + std::to_string(depth) + "*("});
      ++i;
    } else if (options.depth_parens && c == ')' && depth > 0) {
      // An unmatched ')' falls through to the plain-character case.
      out.push_back({TokenKind::kDepthParen, "*" + std::to_string(depth) + "*)"});
      --depth;
      ++i;
    } else {
      std::size_t w = CodePointWidth(line, i);
      PushChars(line.substr(i, w), &out);
      i += w;
    }
  }
  return out;
}

TokenSequence EncodeSentence(const SentenceRecord &record, bool with_pos) {
  if (with_pos && (!record.tags || record.tags->size() != record.tokens.size())) {
    throw Error(ErrorCode::kMalformedEntry,
                "sentence '" + record.cleaned + "' has " +
                    std::to_string(record.tags ? record.tags->size() : 0) +
                    " tags for " + std::to_string(record.tokens.size()) + " tokens");
  }
  TokenSequence out;
  for (std::size_t i = 0; i < record.tokens.size(); ++i) {
    if (i > 0) out.push_back({TokenKind::kSpace, "+"});
    PushChars(record.tokens[i], &out);
    if (with_pos && !(*record.tags)[i].empty()) {
      out.push_back({TokenKind::kPos, (*record.tags)[i]});
    }
  }
  return out;
}

std::string DecodeAmr(const TokenSequence &tokens) { return Decode(tokens, true); }

std::string DecodeSentence(const TokenSequence &tokens) {
  return Decode(tokens, false);
}

std::string JoinTokens(const TokenSequence &tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i].text;
  }
  return out;
}

TokenSequence SplitTokens(std::string_view line) {
  TokenSequence out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSeparator(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsSeparator(line[i])) ++i;
    if (i == start) break;
    std::string_view t = line.substr(start, i - start);
    Token token{TokenKind::kChar, std::string(t)};
    if (t == "+") {
      token.kind = TokenKind::kSpace;
    } else if (t.size() == 2 && t[0] == '\\' && (t[1] == '+' || t[1] == ':')) {
      token.kind = TokenKind::kEscape;
    } else if (IsDepthParen(t)) {
      token.kind = TokenKind::kDepthParen;
    } else if (t.size() > 1 && t[0] == ':') {
      token.kind = TokenKind::kRelation;
    } else if (CodePointLength(t) > 1) {
      token.kind = TokenKind::kPos;
    }
    out.push_back(std::move(token));
  }
  return out;
}

void Vocab::Add(const TokenSequence &tokens) {
  for (const Token &t : tokens) ++counts_[t.text];
}

std::size_t Vocab::Count(const std::string &symbol) const {
  auto it = counts_.find(symbol);
  return it == counts_.end() ? 0 : it->second;
}

void Vocab::Write(std::ostream &out) const {
  std::vector<std::pair<std::string, std::size_t>> rows(counts_.begin(),
                                                        counts_.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) {
    return a.second > b.second;
  });
  for (const auto &[symbol, count] : rows) out << symbol << '\t' << count << '\n';
}

std::vector<std::vector<std::pair<std::string, std::string>>> ReadTagSidecar(
    std::istream &in) {
  std::vector<std::vector<std::pair<std::string, std::string>>> out;
  std::vector<std::pair<std::string, std::string>> current;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
      continue;
    }
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      current.emplace_back(line, "");
    } else {
      current.emplace_back(line.substr(0, tab), line.substr(tab + 1));
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

}  // namespace amrsmith
