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

// Triple-overlap scoring between AMRs under the best variable mapping.
//
// The search is a steepest-ascent hill climber over partial injective
// mappings from predicted to gold variables. Matches are counted over triple
// multisets; a mapping's score decomposes into per-variable gains (instance
// and attribute triples) and per-pair gains (relation triples), which makes
// every move an incremental update. SmatchOracle scores the same objective by
// brute-force enumeration and is used to check the climber.

#ifndef AMRSMITH_SMATCH_H_
#define AMRSMITH_SMATCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amrsmith/amr.h"
#include "amrsmith/triples.h"

namespace amrsmith {

struct ScoreReport {
  std::size_t matched = 0;
  std::size_t pred_total = 0;
  std::size_t gold_total = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;

  static ScoreReport FromCounts(std::size_t matched, std::size_t pred_total,
                                std::size_t gold_total);
  ScoreReport &operator+=(const ScoreReport &other);
  bool operator==(const ScoreReport &other) const = default;
};

// Partial injective map from predicted to gold variable ids.
struct VariableMapping {
  std::vector<std::pair<std::string, std::string>> pairs;

  std::optional<std::string> Lookup(std::string_view pred) const;
  bool IsInjective() const;
};

struct SmatchOptions {
  int restarts = 4;
  std::uint64_t seed = 0;
  // Per-pair stream so corpus scoring is schedule independent.
  std::uint64_t stream = 0;
  TripleOptions triples;
};

struct SmatchResult {
  ScoreReport report;
  VariableMapping mapping;
};

SmatchResult Smatch(const AmrGraph &pred, const AmrGraph &gold,
                    const SmatchOptions &options = {});
SmatchResult SmatchTriples(const TripleSet &pred, const TripleSet &gold,
                           const SmatchOptions &options = {});

// Number of predicted triples that occur in gold once variables are renamed
// through `mapping` (multiset intersection). Unmapped variables never match.
std::size_t CountMatches(const TripleSet &pred, const TripleSet &gold,
                         const VariableMapping &mapping);

// Exact optimum by enumerating every injection of the smaller variable set
// into the larger one. Throws Error(kTooLarge) when the smaller side has more
// than 8 variables or the enumeration would exceed kOracleMaxMappings.
inline constexpr std::size_t kOracleMaxVariables = 8;
inline constexpr double kOracleMaxMappings = 2e7;
ScoreReport SmatchOracle(const AmrGraph &pred, const AmrGraph &gold,
                         const TripleOptions &options = {});
ScoreReport SmatchOracleTriples(const TripleSet &pred, const TripleSet &gold);

// Micro-averaged score over aligned corpora. Throws kLengthMismatch and
// kEmptyCorpus. `per_pair`, when given, receives each pair's report.
ScoreReport CorpusSmatch(std::span<const AmrGraph> pred,
                         std::span<const AmrGraph> gold,
                         const SmatchOptions &options = {}, int jobs = 1,
                         std::vector<ScoreReport> *per_pair = nullptr);

enum class MetricKind {
  kSmatch,
  kUnlabeled,
  kNoWsd,
  kConcepts,
  kNamedEntities,
  kWikification,
  kNegations,
  kReentrancy,
  kSrl,
};

std::span<const MetricKind> AllMetrics();
// Display name ("No WSD", "Named Ent.", ...).
std::string_view MetricName(MetricKind metric);
// Accepts command-line spellings such as `no-wsd` or `srl`.
std::optional<MetricKind> ParseMetricKind(std::string_view name);

// True for metrics scored as bags of labels without a variable mapping.
bool IsBagMetric(MetricKind metric);
// The triple subset (or relabeling) a mapping-based metric scores.
TripleSet ApplyMetric(const TripleSet &triples, MetricKind metric);
// Labels compared by a bag metric.
std::vector<std::string> MetricBag(const TripleSet &triples, MetricKind metric);

ScoreReport FineGrained(const AmrGraph &pred, const AmrGraph &gold,
                        MetricKind metric, const SmatchOptions &options = {});
ScoreReport CorpusFineGrained(std::span<const AmrGraph> pred,
                              std::span<const AmrGraph> gold, MetricKind metric,
                              const SmatchOptions &options = {}, int jobs = 1);

// `-01` style sense suffix removed (two or more trailing digits).
std::string StripSense(std::string_view concept_name);

}  // namespace amrsmith

#endif  // AMRSMITH_SMATCH_H_
