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

// Turning gold AMR/sentence pairs into translator training data: sentence
// cleaning, wiki stripping, variable removal, and branch reordering driven by
// token alignments.

#ifndef AMRSMITH_PREPROCESS_H_
#define AMRSMITH_PREPROCESS_H_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrsmith/amr.h"
#include "amrsmith/tree.h"

namespace amrsmith {

struct SentenceRecord {
  std::string raw;
  std::string cleaned;
  std::vector<std::string> tokens;
  std::optional<std::vector<std::string>> tags;
};

// Removes `<[A-Za-z/!][^>]*>` markup, keeps everything else (URLs included),
// squeezes whitespace and splits tokens on it.
SentenceRecord CleanSentence(std::string_view raw);

// Copy of `graph` without `:wiki` edges.
AmrGraph StripWiki(const AmrGraph &graph);

struct AlignmentEntry {
  int start = 0;  // token span [start, end)
  int end = 0;
  std::string path;

  bool operator==(const AlignmentEntry &other) const = default;
};

struct Alignment {
  std::vector<AlignmentEntry> entries;

  bool empty() const { return entries.empty(); }
  bool operator==(const Alignment &other) const = default;
};

enum class AlignmentFormat {
  kJamr,  // `3-5|0+0.1 ...` as in `# ::alignments`
  kTsv,   // `token<TAB>path` lines
  kIsi,   // `~e.N` tags inside the AMR itself
};

std::optional<AlignmentFormat> ParseAlignmentFormat(std::string_view name);

// Parses JAMR or TSV alignments. Throws Error(kMalformedEntry) naming the
// offending item. ISI alignments come from RemoveVariables instead.
Alignment ParseAlignments(std::string_view text, AlignmentFormat format);

struct VariableRemoval {
  VfNode tree;
  // One message per re-entrancy that closes a cycle.
  std::vector<std::string> warnings;
  // Paths of nodes whose source carried ISI `~e.N` tags.
  Alignment isi_alignment;
};

// Depth-first expansion from the top. The first visit of a variable expands
// its subtree; later visits emit a childless copy of its concept.
VariableRemoval RemoveVariables(const AmrGraph &graph);

struct Reordering {
  VfNode tree;
  // Input alignment with paths rewritten for the reordered tree.
  Alignment alignment;
};

// Copy of `tree` without the children reached by `relation` (and their
// subtrees), with alignment paths rewritten to match.
Reordering DropRelation(const VfNode &tree, const Alignment &alignment,
                        std::string_view relation);

// Reorders siblings to follow the sentence. A child's key is its own
// smallest aligned token, or for an unaligned child the smallest token in its
// subtree. Children with nothing aligned below them stay glued behind the
// sibling that preceded them; siblings are then stably sorted by key.
// Entries whose path does not resolve are ignored.
Reordering BestReordering(const VfNode &tree, const Alignment &alignment);

// Exact minimizer of inversions between depth-first node order and aligned
// token order. Sibling groups are formed as in BestReordering; nodes with
// more than kMaxExactSiblings groups fall back to BestReordering's order.
inline constexpr std::size_t kMaxExactSiblings = 12;
Reordering MinInversionReordering(const VfNode &tree, const Alignment &alignment);

// Inversions between depth-first node order and token order, counting each
// node at its smallest aligned token. Unaligned nodes are skipped.
std::size_t CountInversions(const VfNode &tree, const Alignment &alignment);

// Children sorted by relation label, then concept, at every node.
VfNode AlphabeticalReordering(const VfNode &tree);

// Majority sibling order of relation labels over a corpus; Apply swaps
// adjacent siblings that appear in the minority order.
class OrderStatistics {
 public:
  void Observe(const VfNode &tree);
  VfNode Apply(const VfNode &tree) const;
  // How often `first` preceded `second` among siblings.
  std::size_t Count(const std::string &first, const std::string &second) const;

 private:
  std::map<std::pair<std::string, std::string>, std::size_t> before_;
};

// Distinct sibling permutations, original first, at most `limit`.
std::vector<VfNode> EnumerateReorderings(const VfNode &tree, std::size_t limit);

struct TrainingPair {
  SentenceRecord sentence;
  VfNode tree;
  Alignment alignment;
};

using ReorderFn = std::function<Reordering(const TrainingPair &)>;

// Original pairs followed by one reordered copy of each.
std::vector<TrainingPair> DoubleData(const std::vector<TrainingPair> &corpus);
std::vector<TrainingPair> DoubleData(const std::vector<TrainingPair> &corpus,
                                     const ReorderFn &reorder);

}  // namespace amrsmith

#endif  // AMRSMITH_PREPROCESS_H_
