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


#include "amrsmith/smatch.h"

#include <gtest/gtest.h>

#include "amrsmith/error.h"
#include "testing.h"

namespace amrsmith {
namespace {

TEST(Smatch, Identity) {
  AmrGraph g = ParseAmr(testing::kHeatWave);
  SmatchResult r = Smatch(g, g);
  EXPECT_EQ(r.report.matched, 19u);
  EXPECT_DOUBLE_EQ(r.report.f, 1.0);
  EXPECT_TRUE(r.mapping.IsInjective());
}

TEST(Smatch, RenamedHeatWave) {
  Rng rng(3);
  AmrGraph g = ParseAmr(testing::kHeatWave);
  EXPECT_DOUBLE_EQ(Smatch(testing::Rename(g, rng), g).report.f, 1.0);
}

TEST(Smatch, DifferentSingleConcepts) {
  // Instance and TOP triples both carry the concept, so nothing matches.
  ScoreReport r = Smatch(ParseAmr("(a / alpha)"), ParseAmr("(b / beta)")).report;
  EXPECT_EQ(r.matched, 0u);
  EXPECT_EQ(r.pred_total, 2u);
  EXPECT_EQ(r.gold_total, 2u);
  EXPECT_EQ(SmatchOracle(ParseAmr("(a / alpha)"), ParseAmr("(b / beta)")).matched, 0u);
}

TEST(Smatch, DisjointConcepts) {
  ScoreReport r = Smatch(ParseAmr("(a / one :ARG0 (b / two))"),
                         ParseAmr("(x / three :ARG0 (y / four))"))
                      .report;
  EXPECT_EQ(r.matched, 1u);  // the ARG0 relation under any mapping
  EXPECT_DOUBLE_EQ(r.precision, 0.25);
  EXPECT_DOUBLE_EQ(r.recall, 0.25);
}

TEST(Smatch, CountMatchesIsMultiset) {
  TripleSet pred = ToTriples(ParseAmr("(a / and :op1 1 :op1 1)"));
  TripleSet gold = ToTriples(ParseAmr("(b / and :op1 1)"));
  VariableMapping m{{{"a", "b"}}};
  EXPECT_EQ(CountMatches(pred, gold, m), 3u);
  EXPECT_EQ(CountMatches(pred, gold, VariableMapping{}), 0u);
}

TEST(Smatch, NeverAboveOracleAndUsuallyEqual) {
  Rng rng(11);
  SmatchOptions options;
  options.restarts = 8;
  int equal = 0;
  const int n = 120;
  for (int i = 0; i < n; ++i) {
    AmrGraph gold = testing::RandomGraph(rng, 6);
    AmrGraph pred = testing::Rename(testing::Perturb(gold, rng), rng);
    options.stream = static_cast<std::uint64_t>(i);
    ScoreReport hill = Smatch(pred, gold, options).report;
    ScoreReport exact = SmatchOracle(pred, gold);
    ASSERT_LE(hill.matched, exact.matched);
    equal += hill.matched == exact.matched;
  }
  EXPECT_GE(equal, n * 99 / 100);
}

TEST(Smatch, OracleRejectsLargeGraphs) {
  Rng rng(5);
  AmrGraph big;
  for (int i = 0; i < 10; ++i) big.AddInstance("v" + std::to_string(i), "thing");
  big.SetTop("v0");
  for (int i = 1; i < 10; ++i) big.AddEdge({"v0", ":op", VarRef{"v" + std::to_string(i)}, {}});
  EXPECT_THROW(SmatchOracle(big, big), Error);
}

TEST(Smatch, DeterministicForSeed) {
  Rng rng(9);
  AmrGraph a = testing::RandomGraph(rng, 8);
  AmrGraph b = testing::Perturb(a, rng);
  SmatchOptions options;
  options.seed = 42;
  EXPECT_EQ(Smatch(a, b, options).report, Smatch(a, b, options).report);
}

TEST(CorpusSmatch, SumsCounts) {
  std::vector<AmrGraph> gold = {ParseAmr("(a / one :ARG0 (b / two))"),
                                ParseAmr("(a / one :ARG0 (b / two))")};
  std::vector<AmrGraph> pred = {gold[0], ParseAmr("(x / three :mod (y / four))")};
  std::vector<ScoreReport> pairs;
  ScoreReport r = CorpusSmatch(pred, gold, {}, 2, &pairs);
  EXPECT_EQ(r.matched, 4u);
  EXPECT_DOUBLE_EQ(r.precision, 0.5);
  EXPECT_DOUBLE_EQ(r.recall, 0.5);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_DOUBLE_EQ(pairs[0].f, 1.0);
  EXPECT_EQ(pairs[1].matched, 0u);
}

TEST(CorpusSmatch, Errors) {
  std::vector<AmrGraph> one = {ParseAmr("(a / one)")};
  std::vector<AmrGraph> none;
  try {
    CorpusSmatch(one, none);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kLengthMismatch);
  }
  try {
    CorpusSmatch(none, none);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
  }
}

TEST(CorpusSmatch, JobsDoNotChangeResult) {
  Rng rng(21);
  std::vector<AmrGraph> pred, gold;
  for (int i = 0; i < 40; ++i) {
    gold.push_back(testing::RandomGraph(rng, 8));
    pred.push_back(testing::Perturb(gold.back(), rng));
  }
  EXPECT_EQ(CorpusSmatch(pred, gold, {}, 1), CorpusSmatch(pred, gold, {}, 4));
}

TEST(FineGrained, Negations) {
  AmrGraph g = ParseAmr("(w / want-01 :polarity - :ARG0 (b / boy))");
  EXPECT_DOUBLE_EQ(FineGrained(g, g, MetricKind::kNegations).f, 1.0);
}

TEST(FineGrained, NoWsd) {
  AmrGraph pred = ParseAmr("(a / affect-01)");
  AmrGraph gold = ParseAmr("(a / affect-02)");
  EXPECT_DOUBLE_EQ(FineGrained(pred, gold, MetricKind::kNoWsd).f, 1.0);
  EXPECT_LT(Smatch(pred, gold).report.f, 1.0);
  EXPECT_EQ(StripSense("affect-01"), "affect");
  EXPECT_EQ(StripSense("wave-4"), "wave-4");
}

TEST(FineGrained, Unlabeled) {
  AmrGraph pred = ParseAmr("(a / one :ARG0 (b / two) :mod (c / three))");
  AmrGraph gold = ParseAmr("(a / one :ARG1 (b / two) :location (c / three))");
  EXPECT_DOUBLE_EQ(FineGrained(pred, gold, MetricKind::kUnlabeled).f, 1.0);
}

TEST(FineGrained, ConceptsAndNames) {
  AmrGraph pred = ParseAmr(R"((c / country :name (n / name :op1 "France")))");
  AmrGraph gold = ParseAmr(R"((c / country :wiki "France" :name (n / name :op1 "France")))");
  EXPECT_DOUBLE_EQ(FineGrained(pred, gold, MetricKind::kConcepts).f, 1.0);
  EXPECT_DOUBLE_EQ(FineGrained(pred, gold, MetricKind::kNamedEntities).f, 1.0);
  EXPECT_DOUBLE_EQ(FineGrained(pred, gold, MetricKind::kWikification).recall, 0.0);
}

TEST(FineGrained, ReentrancyAndSrl) {
  AmrGraph g = ParseAmr(testing::kHeatWave);
  EXPECT_DOUBLE_EQ(FineGrained(g, g, MetricKind::kReentrancy).f, 1.0);
  EXPECT_DOUBLE_EQ(FineGrained(g, g, MetricKind::kSrl).f, 1.0);
  AmrGraph tree = ParseAmr("(a / one :ARG0 (b / two))");
  EXPECT_EQ(FineGrained(tree, tree, MetricKind::kReentrancy).gold_total, 0u);
}

TEST(MetricKind, Names) {
  EXPECT_EQ(AllMetrics().size(), 9u);
  for (MetricKind m : AllMetrics()) {
    EXPECT_FALSE(MetricName(m).empty());
  }
  EXPECT_EQ(ParseMetricKind("no-wsd"), MetricKind::kNoWsd);
  EXPECT_EQ(ParseMetricKind("SRL"), MetricKind::kSrl);
  EXPECT_EQ(ParseMetricKind("bogus"), std::nullopt);
}

}  // namespace
}  // namespace amrsmith
