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

// From raw model output back to a scoreable AMR: repair, duplicate pruning,
// variable and co-reference restoration, wikification.

#ifndef AMRSMITH_POSTPROCESS_H_
#define AMRSMITH_POSTPROCESS_H_

#include <string>
#include <string_view>
#include <vector>

#include "amrsmith/amr.h"
#include "amrsmith/entity_linker.h"
#include "amrsmith/tree.h"

namespace amrsmith {

inline constexpr std::string_view kEmptyConcept = "amr-empty";
// Deeper nodes are dropped by Repair.
inline constexpr int kMaxRepairDepth = 500;

// Total repair of one output line into a tree:
//  - text before the first '(' and after the root closes is ignored;
//  - an unterminated quote ends before the next '(', ')' or ':';
//  - surplus ')' are dropped and missing ones appended;
//  - a relation with no value, and a node with no concept, are deleted;
//  - a `var /` header is skipped;
//  - a bare value that is neither a number nor a fixed symbol becomes a
//    concept node, so `:mod raw` reads as `:mod (raw)`.
// An empty result is `(amr-empty)`. Each repair is appended to `log`.
VfNode Repair(std::string_view raw, std::vector<std::string> *log = nullptr);

// Deletes repeated childless concept leaves, keyed by (relation, concept)
// and numbered in depth-first order over the input tree:
//   1: every occurrence after the first
//   2: occurrences whose parent already had an earlier one
//   3: the third and later occurrences
//   4: 2 or 3
// Method 0 returns the tree unchanged. Removed paths (input tree paths) are
// appended to `removed` in depth-first order.
VfNode Prune(const VfNode &tree, int method,
             std::vector<std::string> *removed = nullptr);

// Variables from the first ASCII letter of each concept (lowercased, `x`
// when there is none), numbered 2, 3, ... on collision in depth-first order.
// Childless nodes whose concept is a number or a fixed symbol become
// constants.
AmrGraph RestoreVariables(const VfNode &tree);

// Depth-first, a childless node whose concept already appeared is merged
// into the first node with that concept. At most one merge per concept.
// Merged variables are appended to `merged` as "dup->first".
AmrGraph RestoreCoreference(const AmrGraph &graph,
                            std::vector<std::string> *merged = nullptr);

// Adds `:wiki "Title"` before the `:name` edge of every named node that the
// linker knows and that has no `:wiki` yet. Each addition goes to `added`
// as `var title`.
AmrGraph Wikify(const AmrGraph &graph, const EntityLinker &linker,
                std::vector<std::string> *added = nullptr);

// The name string of a name node: its `:opN` values in N order.
std::string NameString(const AmrGraph &graph, std::string_view name_node);

struct PipelineOptions {
  int prune_method = 4;
  bool coreference = true;
  const EntityLinker *linker = nullptr;
};

struct LogEntry {
  std::string stage;
  std::string action;
  std::string detail;
};

struct PipelineResult {
  AmrGraph graph;
  std::vector<LogEntry> log;
};

// repair, prune, restore variables, restore co-reference, wikify.
PipelineResult RunPipeline(std::string_view raw, const PipelineOptions &options = {});

}  // namespace amrsmith

#endif  // AMRSMITH_POSTPROCESS_H_
