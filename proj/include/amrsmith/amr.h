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

// AMR graphs in PENMAN notation: representation, parsing, serialization and
// blank-line separated corpus files.

#ifndef AMRSMITH_AMR_H_
#define AMRSMITH_AMR_H_

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "amrsmith/error.h"

namespace amrsmith {

enum class ConstKind { kQuoted, kNumber, kSymbol };

// Constant relation value. Quoted literals are stored without their quotes.
struct Constant {
  std::string literal;
  ConstKind kind = ConstKind::kSymbol;

  bool operator==(const Constant &other) const = default;
};

struct VarRef {
  std::string id;

  bool operator==(const VarRef &other) const = default;
};

using NodeRef = std::variant<VarRef, Constant>;

inline bool IsVar(const NodeRef &ref) {
  return std::holds_alternative<VarRef>(ref);
}

struct Instance {
  std::string id;
  std::string concept_name;
  // Token indices from ISI-style `~e.N` tags, if the source text had any.
  std::vector<int> alignment;
};

struct Edge {
  std::string source;
  std::string relation;  // with the leading ':'
  NodeRef target;
  // ISI tags attached to a constant target.
  std::vector<int> alignment;
};

// `# ::key value` comment lines. Keys keep their order and their grouping
// into lines so that blocks are echoed the way they were read. Comment lines
// without any `::key` are kept verbatim.
class Metadata {
 public:
  struct Entry {
    std::string key;  // empty for a verbatim comment line
    std::string value;
    int line = 0;  // group index; entries sharing it print on one line
  };

  // Parses one comment line (with or without the leading '#').
  void AddLine(std::string_view line);

  std::optional<std::string> Get(std::string_view key) const;
  // Replaces the first entry with this key, or appends a new line.
  void Set(std::string_view key, std::string_view value);
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry> &entries() const { return entries_; }

  // Comment lines, each starting with '#', without trailing newlines.
  std::vector<std::string> Lines() const;

  bool operator==(const Metadata &other) const;

 private:
  std::vector<Entry> entries_;
  int next_line_ = 0;
};

// A rooted, directed, variable-labeled AMR graph. Edge order is the surface
// order of the text it came from; the first edge that reaches a variable in
// depth-first order is where its definition is printed.
class AmrGraph {
 public:
  const std::string &top() const { return top_; }
  const std::vector<Instance> &instances() const { return instances_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const Metadata &metadata() const { return metadata_; }
  Metadata &mutable_metadata() { return metadata_; }

  const Instance *FindInstance(std::string_view id) const;
  bool HasVariable(std::string_view id) const {
    return FindInstance(id) != nullptr;
  }

  // Indices into edges() of the edges leaving `id`, in order.
  std::vector<std::size_t> OutgoingEdges(std::string_view id) const;

  void SetTop(std::string id) { top_ = std::move(id); }
  // Throws ParseError(kDuplicateVariableDefinition) if `id` already exists.
  void AddInstance(std::string id, std::string concept_name,
                   std::vector<int> alignment = {});
  void AddEdge(Edge edge) { edges_.push_back(std::move(edge)); }
  // Removes an instance; edges are left alone.
  void RemoveInstance(std::string_view id);
  void RemoveEdgesIf(const std::function<bool(const Edge &)> &predicate);
  Edge &mutable_edge(std::size_t index) { return edges_[index]; }
  void InsertEdge(std::size_t position, Edge edge);

  // Variables in depth-first order from the top, following edge order.
  // Unreachable variables are not listed.
  std::vector<std::string> PreorderVariables() const;

  // Human-readable descriptions of every violated invariant. Empty when the
  // graph is well formed (including: every variable reachable from top).
  std::vector<std::string> CheckInvariants() const;

  // Same top, same instances, and the same ordered outgoing edges for every
  // variable. Metadata and alignments are ignored.
  bool SameGraph(const AmrGraph &other) const;

 private:
  std::string top_;
  std::vector<Instance> instances_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Edge> edges_;
  Metadata metadata_;
};

// Value classification shared by the parser and the tree tools.
bool IsNumber(std::string_view token);
// `-`, `+`, `imperative`, `expressive`, `interrogative`.
bool IsFixedSymbol(std::string_view token);
// A bare token shaped like a generated variable: `[a-z][0-9]*`.
bool LooksLikeVariable(std::string_view token);
// Bytes <= 0x20 separate tokens in every text format handled here.
inline bool IsSeparator(char c) {
  return static_cast<unsigned char>(c) <= 0x20;
}

// Parses one AMR, optionally preceded by `#` metadata lines.
AmrGraph ParseAmr(std::string_view text);

enum class Layout { kSingleLine, kIndented };

// PENMAN text for `graph`. Single-line output has no newlines and no runs of
// spaces (whitespace inside quoted literals is squeezed as well).
std::string SerializeAmr(const AmrGraph &graph,
                         Layout layout = Layout::kIndented);

// Collapses every run of separator bytes into one space and trims the ends.
std::string SqueezeWhitespace(std::string_view s);

// Quoted literal with `"` and `\` escaped.
std::string QuoteLiteral(std::string_view literal);
std::string ConstantText(const Constant &constant);

// One record of a corpus file: its raw lines and where it started.
struct CorpusBlock {
  std::size_t index = 0;
  int first_line = 1;
  std::string text;
};

// Splits a stream into blank-line separated blocks.
class BlockReader {
 public:
  explicit BlockReader(std::istream &in) : in_(in) {}
  bool Next(CorpusBlock *block);

 private:
  std::istream &in_;
  int line_ = 0;
  std::size_t index_ = 0;
};

struct CorpusError {
  std::size_t block_index = 0;
  int line = 0;  // absolute line in the stream
  int column = 0;
  ErrorCode code = ErrorCode::kSyntax;
  std::string message;
};

// Streaming corpus reader. Malformed blocks are recorded and skipped.
class CorpusReader {
 public:
  explicit CorpusReader(std::istream &in) : blocks_(in) {}

  std::optional<AmrGraph> Next();
  const std::vector<CorpusError> &errors() const { return errors_; }

 private:
  BlockReader blocks_;
  std::vector<CorpusError> errors_;
};

struct Corpus {
  std::vector<AmrGraph> graphs;
  std::vector<CorpusError> errors;
};

Corpus ReadCorpus(std::istream &in);
Corpus ReadCorpusFile(const std::string &path);

// Writes metadata lines, the AMR, and a terminating blank line.
void WriteAmrBlock(std::ostream &out, const AmrGraph &graph,
                   Layout layout = Layout::kIndented);

}  // namespace amrsmith

#endif  // AMRSMITH_AMR_H_
