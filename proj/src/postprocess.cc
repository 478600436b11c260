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

#include "amrsmith/postprocess.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace amrsmith {

namespace {

// ---------------------------------------------------------------------------
// Repair.

enum class LexKind { kOpen, kClose, kRelation, kQuoted, kBare };

struct Lexeme {
  LexKind kind;
  std::string text;
};

bool IsBareChar(char c) {
  return !IsSeparator(c) && c != '(' && c != ')' && c != '"';
}

std::vector<Lexeme> Lex(std::string_view raw, std::vector<std::string> *log) {
  std::vector<Lexeme> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    const char c = raw[i];
    if (IsSeparator(c)) {
      ++i;
    } else if (c == '(') {
      out.push_back({LexKind::kOpen, ""});
      ++i;
    } else if (c == ')') {
      out.push_back({LexKind::kClose, ""});
      ++i;
    } else if (c == '"') {
      std::size_t j = i + 1;
      bool closed = false;
      while (j < raw.size()) {
        if (raw[j] == '\\' && j + 1 < raw.size()) {
          j += 2;
          continue;
        }
        if (raw[j] == '"') {
          closed = true;
          break;
        }
        ++j;
      }
      std::size_t end = j;
      if (!closed) {
        end = raw.find_first_of("():", i + 1);
        if (end == std::string_view::npos) end = raw.size();
        if (log) log->push_back("closed quote opened at byte " + std::to_string(i));
      }
      std::string literal;
      for (std::size_t k = i + 1; k < end; ++k) {
        if (raw[k] == '\\' && k + 1 < end && (raw[k + 1] == '"' || raw[k + 1] == '\\')) {
          ++k;
        }
        literal += raw[k];
      }
      out.push_back({LexKind::kQuoted, std::move(literal)});
      i = closed ? end + 1 : end;
    } else {
      std::size_t j = i;
      while (j < raw.size() && IsBareChar(raw[j])) ++j;
      std::string text(raw.substr(i, j - i));
      out.push_back({c == ':' ? LexKind::kRelation : LexKind::kBare, std::move(text)});
      i = j;
    }
  }
  return out;
}

std::string SanitizeConcept(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (IsSeparator(c) || c == '(' || c == ')' || c == '"' || c == '~') continue;
    out += c;
  }
  std::size_t colons = out.find_first_not_of(':');
  return colons == std::string::npos ? std::string() : out.substr(colons);
}

std::string SanitizeRelation(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != '~') out += c;
  }
  std::size_t first = out.find_first_not_of(':');
  if (first == std::string::npos) return "";
  return ":" + out.substr(first);
}

class Repairer {
 public:
  Repairer(std::string_view raw, std::vector<std::string> *log)
      : lexemes_(Lex(raw, log)), log_(log) {}

  VfNode Run() {
    std::size_t i = 0;
    while (i < lexemes_.size() && lexemes_[i].kind != LexKind::kOpen) ++i;
    if (i > 0) Note("skipped text before the first '('");
    for (; i < lexemes_.size() && !done_; ++i) Step(i);
    if (!done_ && !stack_.empty()) {
      Note("appended " + std::to_string(stack_.size()) + " missing ')'");
      while (!stack_.empty()) Close();
    }
    if (done_ && i < lexemes_.size()) Note("ignored text after the root closed");
    if (!root_) {
      Note("fell back to (" + std::string(kEmptyConcept) + ")");
      VfNode empty;
      empty.concept_name = std::string(kEmptyConcept);
      return empty;
    }
    return std::move(*root_);
  }

 private:
  struct Frame {
    VfNode node;
    bool has_concept = false;
    bool dead = false;
    std::optional<std::string> pending;
  };

  void Note(std::string message) {
    if (log_) log_->push_back(std::move(message));
  }

  void Step(std::size_t &i) {
    const Lexeme &lex = lexemes_[i];
    if (skip_ > 0) {
      if (lex.kind == LexKind::kOpen) ++skip_;
      if (lex.kind == LexKind::kClose) --skip_;
      return;
    }
    if (lex.kind == LexKind::kClose) {
      if (stack_.empty()) {
        Note("dropped surplus ')'");
      } else {
        Close();
      }
      return;
    }
    if (stack_.empty()) {
      // Only reachable before the root opens.
      if (lex.kind == LexKind::kOpen) stack_.push_back(Frame{});
      return;
    }
    Frame &top = stack_.back();
    if (!top.has_concept) {
      if (!top.dead) {
        TakeConcept(i);
      } else if (lex.kind == LexKind::kOpen) {
        skip_ = 1;
      }
      return;
    }
    switch (lex.kind) {
      case LexKind::kOpen:
        if (!top.pending) {
          Note("dropped a node without a relation");
          skip_ = 1;
        } else if (stack_.size() >= static_cast<std::size_t>(kMaxRepairDepth)) {
          Note("dropped a node nested too deeply");
          top.pending.reset();
          skip_ = 1;
        } else {
          Frame child;
          child.node.relation = *top.pending;
          top.pending.reset();
          stack_.push_back(std::move(child));
        }
        break;
      case LexKind::kRelation: {
        if (top.pending) Note("deleted relation " + *top.pending + " without a value");
        std::string relation = SanitizeRelation(lex.text);
        if (relation.empty()) {
          Note("dropped an empty relation");
          top.pending.reset();
        } else {
          top.pending = std::move(relation);
        }
        break;
      }
      case LexKind::kQuoted:
        if (!top.pending) {
          Note("dropped a stray string");
          break;
        }
        top.node.children.push_back(
            {*top.pending, lex.text, ConstKind::kQuoted, {}});
        top.pending.reset();
        break;
      case LexKind::kBare:
        if (!top.pending) {
          Note("dropped stray token '" + lex.text + "'");
          break;
        }
        AddBareValue(&top, lex.text);
        break;
      case LexKind::kClose:
        break;
    }
  }

  void AddBareValue(Frame *frame, const std::string &token) {
    const std::string relation = *frame->pending;
    frame->pending.reset();
    if (IsNumber(token)) {
      frame->node.children.push_back({relation, token, ConstKind::kNumber, {}});
      return;
    }
    if (IsFixedSymbol(token)) {
      frame->node.children.push_back({relation, token, ConstKind::kSymbol, {}});
      return;
    }
    std::string concept_name = SanitizeConcept(token);
    if (concept_name.empty()) {
      Note("deleted relation " + relation + " without a value");
      return;
    }
    Note("wrapped bare value '" + token + "' as a node");
    frame->node.children.push_back({relation, concept_name, std::nullopt, {}});
  }

  void TakeConcept(std::size_t &i) {
    Frame &top = stack_.back();
    const Lexeme &lex = lexemes_[i];
    if (lex.kind == LexKind::kBare) {
      const bool slash_follows = i + 1 < lexemes_.size() &&
                                 lexemes_[i + 1].kind == LexKind::kBare &&
                                 lexemes_[i + 1].text == "/";
      if (lex.text == "/") return;
      if (slash_follows || (lex.text.size() > 1 && lex.text.back() == '/')) {
        Note("skipped variable '" + lex.text + "'");
        if (slash_follows) ++i;
        return;
      }
      std::string concept_name = SanitizeConcept(lex.text);
      if (concept_name.empty()) return;
      top.node.concept_name = std::move(concept_name);
      top.has_concept = true;
      return;
    }
    // Anything but a symbol before the concept: the node is deleted when it
    // closes and its content is only parsed to keep the nesting straight.
    top.dead = true;
    if (lex.kind == LexKind::kOpen) skip_ = 1;
  }

  void Close() {
    Frame frame = std::move(stack_.back());
    stack_.pop_back();
    if (frame.pending) Note("deleted relation " + *frame.pending + " without a value");
    if (!frame.has_concept) {
      Note("deleted a node without a concept");
      if (stack_.empty()) done_ = true;
      return;
    }
    if (stack_.empty()) {
      root_ = std::move(frame.node);
      done_ = true;
      return;
    }
    stack_.back().node.children.push_back(std::move(frame.node));
  }

  std::vector<Lexeme> lexemes_;
  std::vector<std::string> *log_;
  std::vector<Frame> stack_;
  std::optional<VfNode> root_;
  int skip_ = 0;
  bool done_ = false;
};

// ---------------------------------------------------------------------------
// Pruning.

struct PruneState {
  int method;
  std::map<std::pair<std::string, std::string>, int> seen;
  std::set<std::pair<std::pair<std::string, std::string>, std::string>> parents;
  std::vector<std::string> *removed;
};

VfNode PruneNode(const VfNode &node, const std::string &path, PruneState *state) {
  VfNode out;
  out.relation = node.relation;
  out.concept_name = node.concept_name;
  out.constant = node.constant;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    const VfNode &child = node.children[i];
    const std::string child_path = path + "." + std::to_string(i);
    if (child.IsLeaf() && !child.IsConstant()) {
      auto key = std::make_pair(child.relation, child.concept_name);
      const int index = ++state->seen[key];
      const bool same_parent = !state->parents.insert({key, path}).second;
      bool drop = false;
      switch (state->method) {
        case 1: drop = index >= 2; break;
        case 2: drop = same_parent; break;
        case 3: drop = index >= 3; break;
        case 4: drop = same_parent || index >= 3; break;
        default: break;
      }
      if (drop) {
        if (state->removed) state->removed->push_back(child_path);
        continue;
      }
      out.children.push_back(child);
      continue;
    }
    out.children.push_back(PruneNode(child, child_path, state));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variable restoration.

class VariableAssigner {
 public:
  explicit VariableAssigner(const VfNode &tree) { Reserve(tree); }

  AmrGraph Run(const VfNode &tree) {
    AmrGraph graph;
    graph.SetTop(Build(tree, &graph));
    return graph;
  }

 private:
  void Reserve(const VfNode &node) {
    if (node.IsConstant() && node.constant == ConstKind::kSymbol) {
      reserved_.insert(node.concept_name);
    }
    for (const VfNode &child : node.children) Reserve(child);
  }

  std::string Fresh(const std::string &concept_name) {
    char letter = 'x';
    for (char c : concept_name) {
      if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
        letter = static_cast<char>(c | 0x20);
        break;
      }
    }
    int &count = counts_[letter];
    while (true) {
      ++count;
      std::string name(1, letter);
      if (count > 1) name += std::to_string(count);
      if (!reserved_.contains(name)) return name;
    }
  }

  static bool BecomesConstant(const VfNode &node) {
    return node.IsLeaf() && (IsNumber(node.concept_name) || IsFixedSymbol(node.concept_name));
  }

  std::string Build(const VfNode &node, AmrGraph *graph) {
    std::string var = Fresh(node.concept_name);
    graph->AddInstance(var, node.concept_name);
    for (const VfNode &child : node.children) {
      if (child.IsConstant()) {
        graph->AddEdge({var, child.relation, Constant{child.concept_name, *child.constant}, {}});
      } else if (BecomesConstant(child)) {
        ConstKind kind = IsNumber(child.concept_name) ? ConstKind::kNumber : ConstKind::kSymbol;
        graph->AddEdge({var, child.relation, Constant{child.concept_name, kind}, {}});
      } else {
        const std::size_t slot = graph->edges().size();
        graph->AddEdge({var, child.relation, VarRef{}, {}});
        std::string child_var = Build(child, graph);
        graph->mutable_edge(slot).target = VarRef{child_var};
      }
    }
    return var;
  }

  std::unordered_map<char, int> counts_;
  std::unordered_set<std::string> reserved_;
};

bool IsOpRelation(std::string_view relation, int *index) {
  if (relation.size() < 4 || relation.substr(0, 3) != ":op") return false;
  std::string_view digits = relation.substr(3);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), *index);
  return ec == std::errc() && ptr == digits.data() + digits.size();
}

}  // namespace

VfNode Repair(std::string_view raw, std::vector<std::string> *log) {
  return Repairer(raw, log).Run();
}

VfNode Prune(const VfNode &tree, int method, std::vector<std::string> *removed) {
  if (method <= 0) return tree;
  PruneState state{method, {}, {}, removed};
  return PruneNode(tree, "0", &state);
}

AmrGraph RestoreVariables(const VfNode &tree) {
  return VariableAssigner(tree).Run(tree);
}

AmrGraph RestoreCoreference(const AmrGraph &graph, std::vector<std::string> *merged) {
  AmrGraph out = graph;
  std::unordered_map<std::string, std::string> first;
  std::unordered_set<std::string> done;
  for (const std::string &var : graph.PreorderVariables()) {
    const Instance *inst = graph.FindInstance(var);
    auto [it, inserted] = first.emplace(inst->concept_name, var);
    if (inserted || var == graph.top()) continue;
    if (!graph.OutgoingEdges(var).empty() || done.contains(inst->concept_name)) continue;
    const std::string &target = it->second;
    for (std::size_t e = 0; e < out.edges().size(); ++e) {
      Edge &edge = out.mutable_edge(e);
      if (const auto *ref = std::get_if<VarRef>(&edge.target); ref && ref->id == var) {
        edge.target = VarRef{target};
      }
    }
    out.RemoveInstance(var);
    done.insert(inst->concept_name);
    if (merged) merged->push_back(var + "->" + target);
  }
  return out;
}

std::string NameString(const AmrGraph &graph, std::string_view name_node) {
  std::vector<std::pair<int, std::string>> parts;
  for (std::size_t e : graph.OutgoingEdges(name_node)) {
    const Edge &edge = graph.edges()[e];
    int index = 0;
    const auto *constant = std::get_if<Constant>(&edge.target);
    if (constant && IsOpRelation(edge.relation, &index)) {
      parts.emplace_back(index, constant->literal);
    }
  }
  std::stable_sort(parts.begin(), parts.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });
  std::string out;
  for (const auto &[index, literal] : parts) {
    if (!out.empty()) out += ' ';
    out += literal;
  }
  return out;
}

AmrGraph Wikify(const AmrGraph &graph, const EntityLinker &linker,
                std::vector<std::string> *added) {
  AmrGraph out = graph;
  std::unordered_set<std::string> has_wiki;
  for (const Edge &edge : graph.edges()) {
    if (edge.relation == ":wiki") has_wiki.insert(edge.source);
  }
  for (std::size_t e = 0; e < out.edges().size(); ++e) {
    const Edge &edge = out.edges()[e];
    if (edge.relation != ":name" || has_wiki.contains(edge.source)) continue;
    const auto *ref = std::get_if<VarRef>(&edge.target);
    if (ref == nullptr) continue;
    std::string name = NameString(out, ref->id);
    if (name.empty()) continue;
    std::optional<std::string> title = linker.Lookup(name);
    if (!title) continue;
    const std::string source = edge.source;
    out.InsertEdge(e, {source, ":wiki", Constant{*title, ConstKind::kQuoted}, {}});
    has_wiki.insert(source);
    if (added) added->push_back(source + " " + *title);
    ++e;
  }
  return out;
}

PipelineResult RunPipeline(std::string_view raw, const PipelineOptions &options) {
  PipelineResult result;
  std::vector<std::string> notes;
  VfNode tree = Repair(raw, &notes);
  for (std::string &note : notes) result.log.push_back({"repair", "fix", std::move(note)});

  std::vector<std::string> removed;
  tree = Prune(tree, options.prune_method, &removed);
  for (std::string &path : removed) result.log.push_back({"prune", "remove", std::move(path)});

  result.graph = RestoreVariables(tree);

  if (options.coreference) {
    std::vector<std::string> merged;
    result.graph = RestoreCoreference(result.graph, &merged);
    for (std::string &m : merged) result.log.push_back({"coref", "merge", std::move(m)});
  }
  if (options.linker != nullptr) {
    std::vector<std::string> added;
    result.graph = Wikify(result.graph, *options.linker, &added);
    for (std::string &a : added) result.log.push_back({"wikify", "add", std::move(a)});
  }
  return result;
}

}  // namespace amrsmith
