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

#include "amrsmith/amr.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace amrsmith {

namespace {

constexpr int kMaxDepth = 1000;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSeparator(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSeparator(s.back())) s.remove_suffix(1);
  return s;
}

bool IsBlank(std::string_view s) { return Trim(s).empty(); }

bool IsComment(std::string_view line) {
  std::string_view t = Trim(line);
  return !t.empty() && t.front() == '#';
}

// Splits a trailing ISI alignment tag (`~e.3` or `~e.3,4`) off a token.
std::vector<int> StripIsiTag(std::string *token) {
  std::size_t pos = token->rfind("~e.");
  if (pos == std::string::npos || pos + 3 >= token->size()) return {};
  std::string_view digits(*token);
  digits.remove_prefix(pos + 3);
  std::vector<int> out;
  int value = -1;
  for (char c : digits) {
    if (c >= '0' && c <= '9') {
      value = (value < 0 ? 0 : value * 10) + (c - '0');
    } else if (c == ',' && value >= 0) {
      out.push_back(value);
      value = -1;
    } else {
      return {};
    }
  }
  if (value < 0) return {};
  out.push_back(value);
  token->resize(pos);
  return out;
}

class AmrParser {
 public:
  AmrParser(std::string_view text, int line) : text_(text), line_(line) {}

  AmrGraph Parse(Metadata metadata) {
    AmrGraph graph;
    graph.mutable_metadata() = std::move(metadata);
    SkipSpace();
    if (AtEnd()) Fail(ErrorCode::kSyntax, "empty input", Here());
    if (Peek() != '(') Fail(ErrorCode::kSyntax, "expected '('", Here());
    std::string top = ParseNode(&graph, 0);
    graph.SetTop(top);
    SkipSpace();
    if (!AtEnd()) {
      if (Peek() == ')') {
        Fail(ErrorCode::kUnbalancedParens, "unexpected ')'", Here());
      }
      Fail(ErrorCode::kSyntax, "trailing content after AMR", Here());
    }
    ResolveBareValues(&graph);
    return graph;
  }

 private:
  struct Position {
    int line;
    int column;
  };

  struct PendingBare {
    std::size_t edge;
    std::string token;
    Position position;
  };

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }
  Position Here() const { return {line_, column_}; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (!AtEnd() && IsSeparator(Peek())) Advance();
  }

  [[noreturn]] void Fail(ErrorCode code, const std::string &message,
                         Position at) {
    throw ParseError(code, message, at.line, at.column);
  }

  static bool IsBareChar(char c) {
    return !IsSeparator(c) && c != '(' && c != ')' && c != '"';
  }

  std::string ReadBare(bool stop_at_slash) {
    std::string out;
    while (!AtEnd() && IsBareChar(Peek()) && !(stop_at_slash && Peek() == '/')) {
      out.push_back(Peek());
      Advance();
    }
    return out;
  }

  std::string ReadQuoted() {
    Position start = Here();
    Advance();  // opening quote
    std::string out;
    while (true) {
      if (AtEnd()) Fail(ErrorCode::kSyntax, "unterminated string literal", start);
      char c = Peek();
      if (c == '"') {
        Advance();
        return out;
      }
      if (c == '\\' && pos_ + 1 < text_.size() &&
          (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
        Advance();
        out.push_back(Peek());
        Advance();
        continue;
      }
      out.push_back(c);
      Advance();
    }
  }

  std::vector<int> ReadIsiSuffix() {
    if (text_.compare(pos_, 3, "~e.") != 0) return {};
    std::string tag = "x";
    tag += ReadBare(false);
    return StripIsiTag(&tag);
  }

  std::string ParseNode(AmrGraph *graph, int depth) {
    Position open = Here();
    if (depth > kMaxDepth) Fail(ErrorCode::kSyntax, "nesting too deep", open);
    Advance();  // '('
    SkipSpace();
    Position var_pos = Here();
    std::string var = ReadBare(true);
    if (var.empty()) Fail(ErrorCode::kSyntax, "expected variable", var_pos);
    SkipSpace();
    if (AtEnd() || Peek() != '/') {
      Fail(ErrorCode::kSyntax, "expected '/' after variable '" + var + "'",
           Here());
    }
    Advance();
    SkipSpace();
    Position concept_pos = Here();
    std::string concept_name;
    std::vector<int> concept_alignment;
    if (!AtEnd() && Peek() == '"') {
      concept_name = ReadQuoted();
      concept_alignment = ReadIsiSuffix();
    } else {
      concept_name = ReadBare(false);
      concept_alignment = StripIsiTag(&concept_name);
    }
    if (concept_name.empty()) Fail(ErrorCode::kSyntax, "expected concept", concept_pos);
    if (graph->HasVariable(var)) {
      Fail(ErrorCode::kDuplicateVariableDefinition,
           "variable '" + var + "' is already defined", var_pos);
    }
    graph->AddInstance(var, concept_name, std::move(concept_alignment));

    while (true) {
      SkipSpace();
      if (AtEnd()) {
        Fail(ErrorCode::kUnbalancedParens,
             "missing ')' for '(' opened at " + std::to_string(open.line) +
                 ":" + std::to_string(open.column),
             Here());
      }
      char c = Peek();
      if (c == ')') {
        Advance();
        return var;
      }
      if (c != ':') {
        Fail(ErrorCode::kSyntax, "expected relation or ')'", Here());
      }
      Position rel_pos = Here();
      std::string relation = ReadBare(false);
      StripIsiTag(&relation);
      if (relation.size() < 2) Fail(ErrorCode::kSyntax, "empty relation", rel_pos);
      SkipSpace();
      if (AtEnd() || Peek() == ')' || Peek() == ':') {
        Fail(ErrorCode::kDanglingRelation,
             "relation '" + relation + "' has no value", rel_pos);
      }
      if (Peek() == '(') {
        // Reserve the slot first so edges stay in preorder.
        const std::size_t slot = graph->edges().size();
        graph->AddEdge({var, relation, VarRef{}, {}});
        std::string child = ParseNode(graph, depth + 1);
        graph->mutable_edge(slot).target = VarRef{child};
      } else if (Peek() == '"') {
        std::string literal = ReadQuoted();
        std::vector<int> alignment = ReadIsiSuffix();
        graph->AddEdge({var, relation, Constant{literal, ConstKind::kQuoted},
                        std::move(alignment)});
      } else {
        Position value_pos = Here();
        std::string token = ReadBare(false);
        std::vector<int> alignment = StripIsiTag(&token);
        if (token.empty()) {
          Fail(ErrorCode::kDanglingRelation,
               "relation '" + relation + "' has no value", rel_pos);
        }
        pending_.push_back({graph->edges().size(), token, value_pos});
        graph->AddEdge({var, relation, Constant{token, ConstKind::kSymbol},
                        std::move(alignment)});
      }
    }
  }

  // A bare value is a re-entrant reference when it names a variable defined
  // anywhere in the AMR; otherwise it is a constant.
  void ResolveBareValues(AmrGraph *graph) {
    for (const PendingBare &p : pending_) {
      Edge &edge = graph->mutable_edge(p.edge);
      if (graph->HasVariable(p.token)) {
        edge.target = VarRef{p.token};
      } else if (IsNumber(p.token)) {
        edge.target = Constant{p.token, ConstKind::kNumber};
      } else if (IsFixedSymbol(p.token)) {
        edge.target = Constant{p.token, ConstKind::kSymbol};
      } else if (LooksLikeVariable(p.token)) {
        Fail(ErrorCode::kUndefinedVariableReference,
             "variable '" + p.token + "' is never defined", p.position);
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_;
  int column_ = 1;
  std::vector<PendingBare> pending_;
};

class AmrWriter {
 public:
  AmrWriter(const AmrGraph &graph, Layout layout)
      : graph_(graph), layout_(layout) {
    for (std::size_t i = 0; i < graph.edges().size(); ++i) {
      outgoing_[graph.edges()[i].source].push_back(i);
    }
  }

  std::string Write() {
    EmitNode(graph_.top(), 0);
    return std::move(out_);
  }

 private:
  void EmitNode(const std::string &id, int depth) {
    emitted_.insert(id);
    const Instance *instance = graph_.FindInstance(id);
    out_ += '(';
    out_ += id;
    out_ += " / ";
    out_ += instance != nullptr ? instance->concept_name : std::string("unknown");
    auto it = outgoing_.find(id);
    if (it != outgoing_.end()) {
      for (std::size_t index : it->second) {
        const Edge &edge = graph_.edges()[index];
        if (layout_ == Layout::kIndented) {
          out_ += '\n';
          out_.append(static_cast<std::size_t>(depth + 1) * 4, ' ');
        } else {
          out_ += ' ';
        }
        out_ += edge.relation;
        out_ += ' ';
        EmitTarget(edge.target, depth + 1);
      }
    }
    out_ += ')';
  }

  void EmitTarget(const NodeRef &target, int depth) {
    if (const auto *var = std::get_if<VarRef>(&target)) {
      if (!emitted_.count(var->id) && graph_.HasVariable(var->id)) {
        EmitNode(var->id, depth);
      } else {
        out_ += var->id;
      }
      return;
    }
    const auto &constant = std::get<Constant>(target);
    if (layout_ == Layout::kSingleLine && constant.kind == ConstKind::kQuoted) {
      out_ += QuoteLiteral(SqueezeWhitespace(constant.literal));
    } else {
      out_ += ConstantText(constant);
    }
  }

  const AmrGraph &graph_;
  Layout layout_;
  std::unordered_map<std::string, std::vector<std::size_t>> outgoing_;
  std::unordered_set<std::string> emitted_;
  std::string out_;
};

}  // namespace

// Metadata.

void Metadata::AddLine(std::string_view line) {
  std::string_view body = Trim(line);
  const int group = next_line_++;
  std::string_view rest = body;
  while (!rest.empty() && rest.front() == '#') rest.remove_prefix(1);

  // Find `::key` markers that start a token.
  std::vector<std::size_t> marks;
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
    if (rest[i] == ':' && rest[i + 1] == ':' &&
        (i == 0 || IsSeparator(rest[i - 1]))) {
      marks.push_back(i);
    }
  }
  if (marks.empty()) {
    entries_.push_back({"", std::string(body), group});
    return;
  }
  for (std::size_t m = 0; m < marks.size(); ++m) {
    std::string_view segment = rest.substr(marks[m] + 2);
    std::size_t key_end = 0;
    while (key_end < segment.size() && !IsSeparator(segment[key_end])) {
      ++key_end;
    }
    std::string key(segment.substr(0, key_end));
    // Sentence-like values run to the end of the line.
    bool whole_line = key == "snt" || key == "tok" || key == "snt-orig";
    std::string_view value = segment.substr(key_end);
    if (!whole_line && m + 1 < marks.size()) {
      value = rest.substr(marks[m] + 2 + key_end,
                          marks[m + 1] - (marks[m] + 2 + key_end));
    }
    entries_.push_back({key, std::string(Trim(value)), group});
    if (whole_line) break;
  }
}

std::optional<std::string> Metadata::Get(std::string_view key) const {
  for (const Entry &e : entries_) {
    if (!e.key.empty() && e.key == key) return e.value;
  }
  return std::nullopt;
}

void Metadata::Set(std::string_view key, std::string_view value) {
  for (Entry &e : entries_) {
    if (e.key == key) {
      e.value = std::string(value);
      return;
    }
  }
  entries_.push_back({std::string(key), std::string(value), next_line_++});
}

std::vector<std::string> Metadata::Lines() const {
  std::vector<std::string> lines;
  int current = -1;
  for (const Entry &e : entries_) {
    if (e.key.empty()) {
      lines.push_back(e.value);
      current = -1;
      continue;
    }
    if (e.line != current) {
      lines.push_back("#");
      current = e.line;
    }
    std::string &out = lines.back();
    out += " ::";
    out += e.key;
    if (!e.value.empty()) {
      out += ' ';
      out += e.value;
    }
  }
  return lines;
}

bool Metadata::operator==(const Metadata &other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const Entry &a = entries_[i];
    const Entry &b = other.entries_[i];
    if (a.key != b.key || a.value != b.value) return false;
  }
  return true;
}

// AmrGraph.

const Instance *AmrGraph::FindInstance(std::string_view id) const {
  auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &instances_[it->second];
}

std::vector<std::size_t> AmrGraph::OutgoingEdges(std::string_view id) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].source == id) out.push_back(i);
  }
  return out;
}

void AmrGraph::AddInstance(std::string id, std::string concept_name,
                           std::vector<int> alignment) {
  if (index_.count(id)) {
    throw ParseError(ErrorCode::kDuplicateVariableDefinition,
                     "variable '" + id + "' is already defined", 0, 0);
  }
  index_.emplace(id, instances_.size());
  instances_.push_back({std::move(id), std::move(concept_name), std::move(alignment)});
}

void AmrGraph::RemoveInstance(std::string_view id) {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return;
  instances_.erase(instances_.begin() + static_cast<std::ptrdiff_t>(it->second));
  index_.clear();
  for (std::size_t i = 0; i < instances_.size(); ++i) {
    index_.emplace(instances_[i].id, i);
  }
}

void AmrGraph::RemoveEdgesIf(
    const std::function<bool(const Edge &)> &predicate) {
  edges_.erase(std::remove_if(edges_.begin(), edges_.end(), predicate),
               edges_.end());
}

void AmrGraph::InsertEdge(std::size_t position, Edge edge) {
  position = std::min(position, edges_.size());
  edges_.insert(edges_.begin() + static_cast<std::ptrdiff_t>(position),
                std::move(edge));
}

std::vector<std::string> AmrGraph::PreorderVariables() const {
  std::unordered_map<std::string, std::vector<std::string>> children;
  for (const Edge &e : edges_) {
    if (const auto *var = std::get_if<VarRef>(&e.target)) {
      children[e.source].push_back(var->id);
    }
  }
  std::vector<std::string> order;
  if (!HasVariable(top_)) return order;
  std::unordered_set<std::string> seen;
  // Explicit stack: children pushed in reverse to visit them in order.
  std::vector<std::string> stack = {top_};
  while (!stack.empty()) {
    std::string id = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(id).second || !HasVariable(id)) continue;
    order.push_back(id);
    auto it = children.find(id);
    if (it == children.end()) continue;
    for (auto c = it->second.rbegin(); c != it->second.rend(); ++c) {
      if (!seen.count(*c)) stack.push_back(*c);
    }
  }
  return order;
}

std::vector<std::string> AmrGraph::CheckInvariants() const {
  std::vector<std::string> problems;
  if (!HasVariable(top_)) problems.push_back("top '" + top_ + "' is not defined");
  for (const Instance &inst : instances_) {
    if (inst.id.empty()) problems.push_back("empty variable id");
    if (inst.concept_name.empty()) {
      problems.push_back("variable '" + inst.id + "' has an empty concept");
    }
  }
  for (const Edge &e : edges_) {
    if (!HasVariable(e.source)) {
      problems.push_back("edge source '" + e.source + "' is not defined");
    }
    if (e.relation.size() < 2 || e.relation.front() != ':') {
      problems.push_back("malformed relation '" + e.relation + "'");
    }
    if (const auto *var = std::get_if<VarRef>(&e.target)) {
      if (!HasVariable(var->id)) {
        problems.push_back("edge target '" + var->id + "' is not defined");
      }
    }
  }
  if (problems.empty()) {
    std::vector<std::string> reachable = PreorderVariables();
    if (reachable.size() != instances_.size()) {
      problems.push_back("some variables are not reachable from top");
    }
  }
  return problems;
}

bool AmrGraph::SameGraph(const AmrGraph &other) const {
  if (top_ != other.top_ || instances_.size() != other.instances_.size() ||
      edges_.size() != other.edges_.size()) {
    return false;
  }
  for (const Instance &inst : instances_) {
    const Instance *o = other.FindInstance(inst.id);
    if (o == nullptr || o->concept_name != inst.concept_name) return false;
  }
  using Outgoing = std::vector<std::pair<std::string, NodeRef>>;
  auto collect = [](const AmrGraph &g) {
    std::map<std::string, Outgoing> out;
    for (const Edge &e : g.edges_) out[e.source].emplace_back(e.relation, e.target);
    return out;
  };
  return collect(*this) == collect(other);
}

// Classification.

bool IsNumber(std::string_view token) {
  std::size_t i = 0;
  if (i < token.size() && (token[i] == '+' || token[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
    ++i;
    ++digits;
  }
  if (i < token.size() && token[i] == '.') {
    ++i;
    while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) {
      ++i;
      ++digits;
    }
  }
  if (digits == 0) return false;
  if (i < token.size() && (token[i] == 'e' || token[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < token.size() && (token[j] == '+' || token[j] == '-')) ++j;
    std::size_t exp_digits = 0;
    while (j < token.size() && std::isdigit(static_cast<unsigned char>(token[j]))) {
      ++j;
      ++exp_digits;
    }
    if (exp_digits == 0) return false;
    i = j;
  }
  return i == token.size();
}

bool IsFixedSymbol(std::string_view token) {
  return token == "-" || token == "+" || token == "imperative" ||
         token == "expressive" || token == "interrogative";
}

bool LooksLikeVariable(std::string_view token) {
  if (token.empty() || token[0] < 'a' || token[0] > 'z') return false;
  return std::all_of(token.begin() + 1, token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

// Parsing and serialization.

AmrGraph ParseAmr(std::string_view text) {
  Metadata metadata;
  std::size_t pos = 0;
  int line = 1;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    std::string_view current =
        text.substr(pos, end == std::string_view::npos ? std::string_view::npos
                                                       : end - pos);
    if (IsComment(current)) {
      metadata.AddLine(current);
    } else if (!IsBlank(current)) {
      break;
    }
    if (end == std::string_view::npos) {
      pos = text.size();
      break;
    }
    pos = end + 1;
    ++line;
  }
  AmrParser parser(text.substr(pos), line);
  return parser.Parse(std::move(metadata));
}

std::string SqueezeWhitespace(std::string_view s) {
  std::string out;
  bool in_space = false;
  for (char c : s) {
    if (IsSeparator(c)) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out.push_back(' ');
    in_space = false;
    out.push_back(c);
  }
  return out;
}

std::string QuoteLiteral(std::string_view literal) {
  std::string out = "\"";
  for (char c : literal) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string ConstantText(const Constant &constant) {
  return constant.kind == ConstKind::kQuoted ? QuoteLiteral(constant.literal)
                                             : constant.literal;
}

std::string SerializeAmr(const AmrGraph &graph, Layout layout) {
  return AmrWriter(graph, layout).Write();
}

// Corpus files.

bool BlockReader::Next(CorpusBlock *block) {
  std::string line;
  while (true) {
    std::vector<std::string> lines;
    int first = 0;
    while (std::getline(in_, line)) {
      ++line_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (IsBlank(line)) {
        if (lines.empty()) continue;
        break;
      }
      if (lines.empty()) first = line_;
      lines.push_back(line);
    }
    if (lines.empty()) return false;
    // Comment-only blocks (file headers) are not records.
    if (std::all_of(lines.begin(), lines.end(),
                    [](const std::string &l) { return IsComment(l); })) {
      continue;
    }
    block->index = index_++;
    block->first_line = first;
    block->text.clear();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (i > 0) block->text += '\n';
      block->text += lines[i];
    }
    return true;
  }
}

std::optional<AmrGraph> CorpusReader::Next() {
  CorpusBlock block;
  while (blocks_.Next(&block)) {
    try {
      return ParseAmr(block.text);
    } catch (const ParseError &e) {
      errors_.push_back({block.index, block.first_line + e.line() - 1,
                         e.column(), e.code(), e.detail()});
    }
  }
  return std::nullopt;
}

Corpus ReadCorpus(std::istream &in) {
  Corpus corpus;
  CorpusReader reader(in);
  while (auto graph = reader.Next()) corpus.graphs.push_back(std::move(*graph));
  corpus.errors = reader.errors();
  return corpus;
}

Corpus ReadCorpusFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return ReadCorpus(in);
}

void WriteAmrBlock(std::ostream &out, const AmrGraph &graph, Layout layout) {
  for (const std::string &line : graph.metadata().Lines()) out << line << '\n';
  out << SerializeAmr(graph, layout) << "\n\n";
}

}  // namespace amrsmith
