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

#include "amrsmith/triples.h"

#include <algorithm>

namespace amrsmith {

std::string ToString(const Triple &triple) {
  return "(" + triple.label + ", " + triple.arg1 + ", " + triple.arg2 + ")";
}

std::size_t TripleSet::Count(TripleKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(triples.begin(), triples.end(),
                    [kind](const Triple &t) { return t.kind == kind; }));
}

bool IsInverseRelation(std::string_view label) {
  if (label.size() <= 3 || label.substr(label.size() - 3) != "-of") return false;
  if (label == "consist-of") return false;
  if (label.substr(0, 5) == "prep-") return false;
  return true;
}

TripleSet ToTriples(const AmrGraph &graph, const TripleOptions &options) {
  TripleSet set;
  for (const Instance &inst : graph.instances()) {
    set.variables.push_back(inst.id);
    set.triples.push_back(
        {TripleKind::kInstance, "instance", inst.id, inst.concept_name});
  }
  if (const Instance *top = graph.FindInstance(graph.top())) {
    set.triples.push_back({TripleKind::kAttribute, "TOP", top->id, top->concept_name});
  }
  for (const Edge &edge : graph.edges()) {
    std::string label = edge.relation.substr(edge.relation.empty() ? 0 : 1);
    if (const auto *var = std::get_if<VarRef>(&edge.target)) {
      if (options.normalize_inverse && IsInverseRelation(label)) {
        label.resize(label.size() - 3);
        set.triples.push_back({TripleKind::kRelation, label, var->id, edge.source});
      } else {
        set.triples.push_back({TripleKind::kRelation, label, edge.source, var->id});
      }
    } else {
      set.triples.push_back({TripleKind::kAttribute, label, edge.source,
                             std::get<Constant>(edge.target).literal});
    }
  }
  return set;
}

}  // namespace amrsmith
