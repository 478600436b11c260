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

#include "amrsmith/preprocess.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "amrsmith/error.h"

namespace amrsmith {

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z');
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && IsSeparator(s[i])) ++i;
    std::size_t start = i;
    while (i < s.size() && !IsSeparator(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

bool ParseIndex(std::string_view s, int *value) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *value);
  return ec == std::errc() && ptr == s.data() + s.size() && *value >= 0;
}

bool IsPath(std::string_view path) {
  if (path.empty() || path.front() == '.' || path.back() == '.') return false;
  char prev = '.';
  for (char c : path) {
    if (c == '.') {
      if (prev == '.') return false;
    } else if (c < '0' || c > '9') {
      return false;
    }
    prev = c;
  }
  return true;
}

[[noreturn]] void Malformed(std::string_view item) {
  throw Error(ErrorCode::kMalformedEntry,
              "malformed alignment item '" + std::string(item) + "'");
}

// Adds every '+'-separated path in `paths` with span [start, end).
void AddPaths(std::string_view item, std::string_view paths, int start, int end,
              Alignment *out) {
  while (true) {
    std::size_t plus = paths.find('+');
    std::string_view path = paths.substr(0, plus);
    if (!IsPath(path)) Malformed(item);
    out->entries.push_back({start, end, std::string(path)});
    if (plus == std::string_view::npos) break;
    paths.remove_prefix(plus + 1);
  }
}

// ---------------------------------------------------------------------------
// Variable removal.

class Expander {
 public:
  explicit Expander(const AmrGraph &graph) : graph_(graph) {}

  VariableRemoval Run() {
    if (graph_.top().empty() || !graph_.HasVariable(graph_.top())) {
      throw Error(ErrorCode::kSyntax, "graph has no top node");
    }
    VariableRemoval result;
    result_ = &result;
    Expand(graph_.top(), "", "0", &result.tree);
    return result;
  }

 private:
  void Align(const std::vector<int> &tokens, const std::string &path) {
    for (int t : tokens) result_->isi_alignment.entries.push_back({t, t + 1, path});
  }

  void Expand(const std::string &var, const std::string &relation,
              const std::string &path, VfNode *out) {
    const Instance *inst = graph_.FindInstance(var);
    out->relation = relation;
    out->concept_name = inst->concept_name;
    Align(inst->alignment, path);
    expanded_.insert(var);
    on_path_.insert(var);
    for (std::size_t index : graph_.OutgoingEdges(var)) {
      const Edge &edge = graph_.edges()[index];
      const std::string child_path =
          path + "." + std::to_string(out->children.size());
      VfNode child;
      child.relation = edge.relation;
      if (const Constant *c = std::get_if<Constant>(&edge.target)) {
        child.concept_name = c->literal;
        child.constant = c->kind;
        Align(edge.alignment, child_path);
        out->children.push_back(std::move(child));
        continue;
      }
      const std::string &target = std::get<VarRef>(edge.target).id;
      const Instance *target_inst = graph_.FindInstance(target);
      if (target_inst == nullptr) {
        child.concept_name = target;
        out->children.push_back(std::move(child));
        continue;
      }
      if (expanded_.contains(target)) {
        if (on_path_.contains(target)) {
          result_->warnings.push_back("cyclic reference to '" + target +
                                      "' from '" + var + "'");
        }
        child.concept_name = target_inst->concept_name;
        Align(target_inst->alignment, child_path);
        out->children.push_back(std::move(child));
        continue;
      }
      out->children.push_back(VfNode{});
      Expand(target, edge.relation, child_path, &out->children.back());
    }
    on_path_.erase(var);
  }

  const AmrGraph &graph_;
  VariableRemoval *result_ = nullptr;
  std::unordered_set<std::string> expanded_;
  std::unordered_set<std::string> on_path_;
};

// ---------------------------------------------------------------------------
// Reordering.

constexpr int kNoToken = std::numeric_limits<int>::max();

enum class SortMode { kKey, kInversions };

class Reorderer {
 public:
  Reorderer(const VfNode &tree, const Alignment &alignment, SortMode mode)
      : tree_(tree), alignment_(alignment), mode_(mode) {
    for (const AlignmentEntry &entry : alignment.entries) {
      if (ResolvePath(tree, entry.path) == nullptr) continue;
      auto [it, inserted] = own_.emplace(entry.path, entry.start);
      if (!inserted) it->second = std::min(it->second, entry.start);
    }
  }

  Reordering Run() {
    Reordering result;
    Build(tree_, "0", "0", &result.tree);
    for (const AlignmentEntry &entry : alignment_.entries) {
      auto it = remap_.find(entry.path);
      if (it == remap_.end()) continue;
      result.alignment.entries.push_back({entry.start, entry.end, it->second});
    }
    return result;
  }

 private:
  int Own(const std::string &path) const {
    auto it = own_.find(path);
    return it == own_.end() ? kNoToken : it->second;
  }

  // Own tokens of every node in the subtree, in depth-first order.
  void Tokens(const VfNode &node, const std::string &path,
              std::vector<int> *out) const {
    if (int t = Own(path); t != kNoToken) out->push_back(t);
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      Tokens(node.children[i], path + "." + std::to_string(i), out);
    }
  }

  struct Group {
    std::vector<std::size_t> members;  // original child indices
    int key = -1;                      // -1 for the leading unaligned group
    std::vector<int> tokens;
  };

  std::vector<Group> MakeGroups(const VfNode &node, const std::string &path) const {
    std::vector<Group> groups;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const std::string child_path = path + "." + std::to_string(i);
      std::vector<int> tokens;
      Tokens(node.children[i], child_path, &tokens);
      if (tokens.empty()) {
        if (groups.empty()) groups.push_back(Group{});
        groups.back().members.push_back(i);
        continue;
      }
      Group group;
      group.members.push_back(i);
      int own = Own(child_path);
      group.key = own != kNoToken ? own
                                  : *std::min_element(tokens.begin(), tokens.end());
      group.tokens = std::move(tokens);
      groups.push_back(std::move(group));
    }
    return groups;
  }

  // Order of groups[first..] minimizing cross inversions; ties go to the
  // lexicographically smallest sequence of original positions.
  static std::vector<std::size_t> ExactOrder(const std::vector<Group> &groups,
                                             std::size_t first) {
    const std::size_t n = groups.size() - first;
    std::vector<std::vector<long long>> cost(n, std::vector<long long>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) continue;
        for (int x : groups[first + a].tokens) {
          for (int y : groups[first + b].tokens) cost[a][b] += x > y;
        }
      }
    }
    const std::size_t full = (std::size_t{1} << n) - 1;
    // rest[mask]: least cost of ordering the groups not in `mask`.
    std::vector<long long> rest(full + 1, 0);
    for (std::size_t mask = full; mask-- > 0;) {
      long long best = std::numeric_limits<long long>::max();
      for (std::size_t g = 0; g < n; ++g) {
        if (mask >> g & 1) continue;
        long long c = rest[mask | (std::size_t{1} << g)];
        for (std::size_t b = 0; b < n; ++b) {
          if (b != g && !(mask >> b & 1)) c += cost[g][b];
        }
        best = std::min(best, c);
      }
      rest[mask] = best;
    }
    std::vector<std::size_t> order;
    std::size_t mask = 0;
    while (mask != full) {
      for (std::size_t g = 0; g < n; ++g) {
        if (mask >> g & 1) continue;
        long long c = rest[mask | (std::size_t{1} << g)];
        for (std::size_t b = 0; b < n; ++b) {
          if (b != g && !(mask >> b & 1)) c += cost[g][b];
        }
        if (c == rest[mask]) {
          order.push_back(first + g);
          mask |= std::size_t{1} << g;
          break;
        }
      }
    }
    return order;
  }

  void Build(const VfNode &node, const std::string &old_path,
             const std::string &new_path, VfNode *out) {
    remap_[old_path] = new_path;
    out->relation = node.relation;
    out->concept_name = node.concept_name;
    out->constant = node.constant;
    if (node.children.empty()) return;

    std::vector<Group> groups = MakeGroups(node, old_path);
    std::vector<std::size_t> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    const std::size_t first = groups.front().key < 0 ? 1 : 0;
    if (mode_ == SortMode::kInversions && groups.size() - first <= kMaxExactSiblings &&
        groups.size() - first > 1) {
      std::vector<std::size_t> tail = ExactOrder(groups, first);
      std::copy(tail.begin(), tail.end(), order.begin() + first);
    } else {
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return groups[a].key < groups[b].key;
      });
    }

    out->children.reserve(node.children.size());
    for (std::size_t g : order) {
      for (std::size_t i : groups[g].members) {
        const std::string child_new = new_path + "." + std::to_string(out->children.size());
        out->children.push_back(VfNode{});
        Build(node.children[i], old_path + "." + std::to_string(i), child_new,
              &out->children.back());
      }
    }
  }

  const VfNode &tree_;
  const Alignment &alignment_;
  SortMode mode_;
  std::unordered_map<std::string, int> own_;
  std::unordered_map<std::string, std::string> remap_;
};

void CopyWithout(const VfNode &node, std::string_view relation,
                 const std::string &old_path, const std::string &new_path,
                 std::unordered_map<std::string, std::string> *remap, VfNode *out) {
  (*remap)[old_path] = new_path;
  out->relation = node.relation;
  out->concept_name = node.concept_name;
  out->constant = node.constant;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (node.children[i].relation == relation) continue;
    const std::string child_new = new_path + "." + std::to_string(out->children.size());
    out->children.push_back(VfNode{});
    CopyWithout(node.children[i], relation, old_path + "." + std::to_string(i),
                child_new, remap, &out->children.back());
  }
}

void CollectTokens(const VfNode &node, const std::string &path,
                   const std::unordered_map<std::string, int> &own,
                   std::vector<int> *out) {
  if (auto it = own.find(path); it != own.end()) out->push_back(it->second);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    CollectTokens(node.children[i], path + "." + std::to_string(i), own, out);
  }
}

void ObserveNode(const VfNode &node,
                 std::map<std::pair<std::string, std::string>, std::size_t> *before) {
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    for (std::size_t j = i + 1; j < node.children.size(); ++j) {
      ++(*before)[{node.children[i].relation, node.children[j].relation}];
    }
    ObserveNode(node.children[i], before);
  }
}

std::vector<VfNode> Variants(const VfNode &node, std::size_t limit) {
  if (node.children.empty() || limit <= 1) return {node};
  std::vector<std::vector<VfNode>> child_variants;
  child_variants.reserve(node.children.size());
  for (const VfNode &child : node.children) {
    child_variants.push_back(Variants(child, limit));
  }
  std::vector<VfNode> out;
  std::set<std::string> seen;
  std::vector<std::size_t> perm(node.children.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Odometer over the variants of each child, in permuted position order.
    std::vector<std::size_t> pick(perm.size(), 0);
    while (true) {
      VfNode variant = node;
      for (std::size_t k = 0; k < perm.size(); ++k) {
        variant.children[k] = child_variants[perm[k]][pick[k]];
      }
      if (seen.insert(SerializeTree(variant)).second) {
        out.push_back(std::move(variant));
        if (out.size() >= limit) return out;
      }
      bool done = true;
      for (std::size_t k = perm.size(); k-- > 0;) {
        if (++pick[k] < child_variants[perm[k]].size()) {
          done = false;
          break;
        }
        pick[k] = 0;
      }
      if (done) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

SentenceRecord CleanSentence(std::string_view raw) {
  SentenceRecord record;
  record.raw = std::string(raw);
  std::string stripped;
  stripped.reserve(raw.size());
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i] == '<' && i + 1 < raw.size() &&
        (IsAsciiAlpha(raw[i + 1]) || raw[i + 1] == '/' || raw[i + 1] == '!')) {
      std::size_t close = raw.find('>', i + 1);
      if (close != std::string_view::npos) {
        // A tag glued between two words still separates them.
        stripped += ' ';
        i = close + 1;
        continue;
      }
    }
    stripped += raw[i++];
  }
  record.cleaned = SqueezeWhitespace(stripped);
  record.tokens = SplitWhitespace(record.cleaned);
  return record;
}

AmrGraph StripWiki(const AmrGraph &graph) {
  AmrGraph out = graph;
  out.RemoveEdgesIf([](const Edge &edge) { return edge.relation == ":wiki"; });
  return out;
}

std::optional<AlignmentFormat> ParseAlignmentFormat(std::string_view name) {
  if (name == "jamr") return AlignmentFormat::kJamr;
  if (name == "tsv") return AlignmentFormat::kTsv;
  if (name == "isi") return AlignmentFormat::kIsi;
  return std::nullopt;
}

Alignment ParseAlignments(std::string_view text, AlignmentFormat format) {
  Alignment out;
  if (format == AlignmentFormat::kJamr) {
    for (const std::string &item : SplitWhitespace(text)) {
      std::string_view view = item;
      std::size_t bar = view.find('|');
      std::size_t dash = view.find('-');
      if (bar == std::string_view::npos || dash == std::string_view::npos ||
          dash > bar) {
        Malformed(item);
      }
      int start = 0;
      int end = 0;
      if (!ParseIndex(view.substr(0, dash), &start) ||
          !ParseIndex(view.substr(dash + 1, bar - dash - 1), &end) || end <= start) {
        Malformed(item);
      }
      AddPaths(item, view.substr(bar + 1), start, end, &out);
    }
  } else if (format == AlignmentFormat::kTsv) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::vector<std::string> fields = SplitWhitespace(line);
      if (fields.empty() || fields.front().front() == '#') continue;
      int token = 0;
      if (fields.size() != 2 || !ParseIndex(fields[0], &token)) Malformed(line);
      AddPaths(line, fields[1], token, token + 1, &out);
    }
  } else {
    throw Error(ErrorCode::kMalformedEntry,
                "isi alignments are read from the AMR text, not a separate field");
  }
  return out;
}

VariableRemoval RemoveVariables(const AmrGraph &graph) {
  return Expander(graph).Run();
}

Reordering DropRelation(const VfNode &tree, const Alignment &alignment,
                        std::string_view relation) {
  Reordering out;
  std::unordered_map<std::string, std::string> remap;
  CopyWithout(tree, relation, "0", "0", &remap, &out.tree);
  for (const AlignmentEntry &entry : alignment.entries) {
    auto it = remap.find(entry.path);
    if (it != remap.end()) out.alignment.entries.push_back({entry.start, entry.end, it->second});
  }
  return out;
}

Reordering BestReordering(const VfNode &tree, const Alignment &alignment) {
  return Reorderer(tree, alignment, SortMode::kKey).Run();
}

Reordering MinInversionReordering(const VfNode &tree, const Alignment &alignment) {
  return Reorderer(tree, alignment, SortMode::kInversions).Run();
}

std::size_t CountInversions(const VfNode &tree, const Alignment &alignment) {
  std::unordered_map<std::string, int> own;
  for (const AlignmentEntry &entry : alignment.entries) {
    if (ResolvePath(tree, entry.path) == nullptr) continue;
    auto [it, inserted] = own.emplace(entry.path, entry.start);
    if (!inserted) it->second = std::min(it->second, entry.start);
  }
  std::vector<int> seq;
  CollectTokens(tree, "0", own, &seq);
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j];
  }
  return inversions;
}

VfNode AlphabeticalReordering(const VfNode &tree) {
  VfNode out = tree;
  for (VfNode &child : out.children) child = AlphabeticalReordering(child);
  std::stable_sort(out.children.begin(), out.children.end(),
                   [](const VfNode &a, const VfNode &b) {
                     if (a.relation != b.relation) return a.relation < b.relation;
                     return a.concept_name < b.concept_name;
                   });
  return out;
}

void OrderStatistics::Observe(const VfNode &tree) { ObserveNode(tree, &before_); }

std::size_t OrderStatistics::Count(const std::string &first,
                                   const std::string &second) const {
  auto it = before_.find({first, second});
  return it == before_.end() ? 0 : it->second;
}

VfNode OrderStatistics::Apply(const VfNode &tree) const {
  VfNode out = tree;
  for (VfNode &child : out.children) child = Apply(child);
  std::vector<VfNode> &kids = out.children;
  for (std::size_t pass = 0; pass < kids.size(); ++pass) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < kids.size(); ++i) {
      const std::string &a = kids[i].relation;
      const std::string &b = kids[i + 1].relation;
      if (Count(b, a) > Count(a, b)) {
        std::swap(kids[i], kids[i + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return out;
}

std::vector<VfNode> EnumerateReorderings(const VfNode &tree, std::size_t limit) {
  if (limit == 0) return {};
  return Variants(tree, limit);
}

std::vector<TrainingPair> DoubleData(const std::vector<TrainingPair> &corpus) {
  return DoubleData(corpus, [](const TrainingPair &pair) {
    return BestReordering(pair.tree, pair.alignment);
  });
}

std::vector<TrainingPair> DoubleData(const std::vector<TrainingPair> &corpus,
                                     const ReorderFn &reorder) {
  std::vector<TrainingPair> out = corpus;
  out.reserve(corpus.size() * 2);
  for (const TrainingPair &pair : corpus) {
    Reordering r = reorder(pair);
    out.push_back({pair.sentence, std::move(r.tree), std::move(r.alignment)});
  }
  return out;
}

}  // namespace amrsmith
