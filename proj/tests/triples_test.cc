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

#include <gtest/gtest.h>

#include <algorithm>

#include "testing.h"

namespace amrsmith {
namespace {

std::vector<std::string> Strings(const TripleSet &set) {
  std::vector<std::string> out;
  for (const Triple &t : set.triples) out.push_back(ToString(t));
  std::sort(out.begin(), out.end());
  return out;
}

TEST(ToTriples, HeatWaveTable) {
  TripleSet set = ToTriples(ParseAmr(testing::kHeatWave));
  EXPECT_EQ(set.Count(TripleKind::kInstance), 8u);
  EXPECT_EQ(set.Count(TripleKind::kAttribute), 3u);
  EXPECT_EQ(set.Count(TripleKind::kRelation), 8u);
  std::vector<std::string> expected = {
      "(instance, a, affect-01)", "(instance, w, wave-04)", "(instance, h2, heat)",
      "(instance, c, country)",   "(instance, n, name)",    "(instance, p, person)",
      "(instance, s, strike-02)", "(instance, h, hunger-01)", "(TOP, a, affect-01)",
      "(wiki, c, France)",        "(op1, n, France)",       "(ARG0, a, w)",
      "(ARG1, a, p)",             "(location, w, c)",       "(ARG1, w, h2)",
      "(name, c, n)",             "(ARG0, s, p)",           "(mod, s, h)",
      "(ARG0, h, p)"};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(Strings(set), expected);
}

TEST(ToTriples, LiteralInverse) {
  AmrGraph g = ParseAmr("(p / person :ARG0-of (s / strike-02))");
  TripleOptions literal;
  literal.normalize_inverse = false;
  std::vector<std::string> got = Strings(ToTriples(g, literal));
  EXPECT_NE(std::find(got.begin(), got.end(), "(ARG0-of, p, s)"), got.end());
  got = Strings(ToTriples(g));
  EXPECT_NE(std::find(got.begin(), got.end(), "(ARG0, s, p)"), got.end());
}

TEST(IsInverseRelation, Exceptions) {
  EXPECT_TRUE(IsInverseRelation("ARG0-of"));
  EXPECT_TRUE(IsInverseRelation("mod-of"));
  EXPECT_FALSE(IsInverseRelation("consist-of"));
  EXPECT_FALSE(IsInverseRelation("prep-out-of"));
  EXPECT_FALSE(IsInverseRelation("ARG0"));
}

TEST(ToTriples, Variables) {
  TripleSet set = ToTriples(ParseAmr("(a / and :op1 (b / boy) :op2 b)"));
  EXPECT_EQ(set.variables, (std::vector<std::string>{"a", "b"}));
}

}  // namespace
}  // namespace amrsmith
