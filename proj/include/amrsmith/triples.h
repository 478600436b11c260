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

#ifndef AMRSMITH_TRIPLES_H_
#define AMRSMITH_TRIPLES_H_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "amrsmith/amr.h"

namespace amrsmith {

enum class TripleKind { kInstance, kAttribute, kRelation };

// (label, arg1, arg2). For instance triples the label is "instance"; the
// root is marked by the attribute triple (TOP, top, concept-of-top).
struct Triple {
  TripleKind kind = TripleKind::kInstance;
  std::string label;
  std::string arg1;
  std::string arg2;

  auto operator<=>(const Triple &other) const = default;
  bool operator==(const Triple &other) const = default;
};

std::string ToString(const Triple &triple);

struct TripleSet {
  std::vector<Triple> triples;
  // Variables that triples may refer to, in definition order.
  std::vector<std::string> variables;

  std::size_t size() const { return triples.size(); }
  std::size_t Count(TripleKind kind) const;
};

struct TripleOptions {
  // Rewrite `X :rel-of Y` as (rel, Y, X), the way reference scorers do.
  bool normalize_inverse = true;
};

// True for `ARG0-of` style labels (without the colon). `consist-of` and the
// `prep-...-of` family are regular relations.
bool IsInverseRelation(std::string_view label);

TripleSet ToTriples(const AmrGraph &graph, const TripleOptions &options = {});

}  // namespace amrsmith

#endif  // AMRSMITH_TRIPLES_H_
