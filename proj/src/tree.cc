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

#include "amrsmith/tree.h"

#include <charconv>

namespace amrsmith {

namespace {

void Emit(const VfNode &node, Layout layout, int depth, std::string *out) {
  if (node.IsConstant()) {
    if (layout == Layout::kSingleLine && *node.constant == ConstKind::kQuoted) {
      *out += QuoteLiteral(SqueezeWhitespace(node.concept_name));
    } else {
      *out += ConstantText({node.concept_name, *node.constant});
    }
    return;
  }
  *out += '(';
  *out += node.concept_name;
  for (const VfNode &child : node.children) {
    if (layout == Layout::kIndented) {
      *out += '\n';
      out->append(static_cast<std::size_t>(depth + 1) * 4, ' ');
    } else {
      *out += ' ';
    }
    *out += child.relation;
    *out += ' ';
    Emit(child, layout, depth + 1, out);
  }
  *out += ')';
}

void CollectPaths(const VfNode &node, const std::string &path,
                  std::vector<std::string> *out) {
  out->push_back(path);
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    CollectPaths(node.children[i], path + "." + std::to_string(i), out);
  }
}

template <typename Node>
Node *Walk(Node *tree, std::string_view path) {
  if (path.empty()) return nullptr;
  bool first = true;
  Node *node = tree;
  while (true) {
    std::size_t dot = path.find('.');
    std::string_view part = path.substr(0, dot);
    std::size_t index = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), index);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      return nullptr;
    }
    if (first) {
      if (index != 0) return nullptr;
      first = false;
    } else {
      if (index >= node->children.size()) return nullptr;
      node = &node->children[index];
    }
    if (dot == std::string_view::npos) return node;
    path.remove_prefix(dot + 1);
  }
}

}  // namespace

std::string SerializeTree(const VfNode &tree, Layout layout) {
  std::string out;
  Emit(tree, layout, 0, &out);
  return out;
}

std::size_t CountNodes(const VfNode &tree) {
  std::size_t n = 1;
  for (const VfNode &child : tree.children) n += CountNodes(child);
  return n;
}

const VfNode *ResolvePath(const VfNode &tree, std::string_view path) {
  return Walk(&tree, path);
}

VfNode *ResolvePath(VfNode *tree, std::string_view path) {
  return Walk(tree, path);
}

std::vector<std::string> AllPaths(const VfNode &tree) {
  std::vector<std::string> out;
  CollectPaths(tree, "0", &out);
  return out;
}

}  // namespace amrsmith
