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

#ifndef AMRSMITH_TREE_H_
#define AMRSMITH_TREE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amrsmith/amr.h"

namespace amrsmith {

// Node of a variable-free AMR: `(material :mod (raw) :quant 1)`. Each node
// stores the relation that leads to it (empty at the root). Constant leaves
// print bare, concept nodes print in parentheses.
struct VfNode {
  std::string relation;
  std::string concept_name;
  std::optional<ConstKind> constant;
  std::vector<VfNode> children;

  bool IsConstant() const { return constant.has_value(); }
  bool IsLeaf() const { return children.empty(); }

  bool operator==(const VfNode &other) const = default;
};

using VariableFreeTree = VfNode;

std::string SerializeTree(const VfNode &tree,
                          Layout layout = Layout::kSingleLine);

std::size_t CountNodes(const VfNode &tree);

// Resolves a dot-separated child path where "0" is the root, "0.1" its second
// child and so on. Returns nullptr when the path does not exist.
const VfNode *ResolvePath(const VfNode &tree, std::string_view path);
VfNode *ResolvePath(VfNode *tree, std::string_view path);

// Child paths of every node in depth-first order ("0", "0.0", ...).
std::vector<std::string> AllPaths(const VfNode &tree);

}  // namespace amrsmith

#endif  // AMRSMITH_TREE_H_
