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

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <regex>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "amrsmith/parallel.h"
#include "amrsmith/random.h"

namespace amrsmith {

namespace {

constexpr int kUnmapped = -1;

// Index assignment for variable ids; ids seen only inside triples are added.
class VariableIndex {
 public:
  explicit VariableIndex(const TripleSet &set) {
    for (const std::string &v : set.variables) Add(v);
    for (const Triple &t : set.triples) {
      Add(t.arg1);
      if (t.kind == TripleKind::kRelation) Add(t.arg2);
    }
  }

  int Get(const std::string &id) const { return index_.at(id); }
  int size() const { return static_cast<int>(ids_.size()); }
  const std::string &id(int i) const { return ids_[static_cast<std::size_t>(i)]; }

 private:
  void Add(const std::string &id) {
    if (index_.emplace(id, static_cast<int>(ids_.size())).second) {
      ids_.push_back(id);
    }
  }

  std::unordered_map<std::string, int> index_;
  std::vector<std::string> ids_;
};

struct PairGain {
  int other_pred;
  int other_gold;
  int gain;
};

// The mapping objective: score(m) = sum_i unary(i, m(i)) + sum over relation
// pairs of their gain when both endpoints map consistently.
class MatchProblem {
 public:
  MatchProblem(const TripleSet &pred, const TripleSet &gold)
      : pred_vars_(pred), gold_vars_(gold) {
    n_ = pred_vars_.size();
    m_ = gold_vars_.size();
    unary_.assign(static_cast<std::size_t>(n_) * m_, 0);
    pairs_.resize(static_cast<std::size_t>(n_) * m_);
    BuildUnary(pred, gold);
    BuildPairs(pred, gold);
  }

  int n() const { return n_; }
  int m() const { return m_; }
  const VariableIndex &pred_vars() const { return pred_vars_; }
  const VariableIndex &gold_vars() const { return gold_vars_; }

  int Unary(int i, int j) const {
    return j == kUnmapped ? 0 : unary_[Cell(i, j)];
  }

  // Pair gains from pred var i mapped to j, against current mapping, ignoring
  // partners in `skip_a`/`skip_b`.
  int PairSum(int i, int j, const std::vector<int> &mapping, int skip_a,
              int skip_b) const {
    if (j == kUnmapped) return 0;
    int total = 0;
    for (const PairGain &p : pairs_[Cell(i, j)]) {
      if (p.other_pred == skip_a || p.other_pred == skip_b) continue;
      if (mapping[static_cast<std::size_t>(p.other_pred)] == p.other_gold) {
        total += p.gain;
      }
    }
    return total;
  }

  // Gain of pairs between i1->j1 and i2->j2 specifically.
  int CrossGain(int i1, int j1, int i2, int j2) const {
    if (j1 == kUnmapped || j2 == kUnmapped) return 0;
    int total = 0;
    for (const PairGain &p : pairs_[Cell(i1, j1)]) {
      if (p.other_pred == i2 && p.other_gold == j2) total += p.gain;
    }
    return total;
  }

  int Score(const std::vector<int> &mapping) const {
    int unary = 0;
    int pair_twice = 0;
    for (int i = 0; i < n_; ++i) {
      int j = mapping[static_cast<std::size_t>(i)];
      unary += Unary(i, j);
      pair_twice += PairSum(i, j, mapping, kUnmapped, kUnmapped);
    }
    return unary + pair_twice / 2;
  }

 private:
  std::size_t Cell(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_) +
           static_cast<std::size_t>(j);
  }

  // Key for a triple that involves a single variable.
  using UnaryKey = std::tuple<TripleKind, std::string, std::string>;

  void BuildUnary(const TripleSet &pred, const TripleSet &gold) {
    auto collect = [](const TripleSet &set, const VariableIndex &vars) {
      std::map<UnaryKey, std::map<int, int>> out;
      for (const Triple &t : set.triples) {
        if (t.kind == TripleKind::kRelation) {
          if (t.arg1 != t.arg2) continue;
          ++out[{t.kind, t.label, std::string()}][vars.Get(t.arg1)];
        } else {
          ++out[{t.kind, t.label, t.arg2}][vars.Get(t.arg1)];
        }
      }
      return out;
    };
    auto pred_groups = collect(pred, pred_vars_);
    auto gold_groups = collect(gold, gold_vars_);
    for (const auto &[key, pred_counts] : pred_groups) {
      auto it = gold_groups.find(key);
      if (it == gold_groups.end()) continue;
      for (const auto &[i, cp] : pred_counts) {
        for (const auto &[j, cg] : it->second) {
          unary_[Cell(i, j)] += std::min(cp, cg);
        }
      }
    }
  }

  void BuildPairs(const TripleSet &pred, const TripleSet &gold) {
    using Ends = std::map<std::pair<int, int>, int>;
    auto collect = [](const TripleSet &set, const VariableIndex &vars) {
      std::map<std::string, Ends> out;
      for (const Triple &t : set.triples) {
        if (t.kind != TripleKind::kRelation || t.arg1 == t.arg2) continue;
        ++out[t.label][{vars.Get(t.arg1), vars.Get(t.arg2)}];
      }
      return out;
    };
    auto pred_groups = collect(pred, pred_vars_);
    auto gold_groups = collect(gold, gold_vars_);
    for (const auto &[label, pred_ends] : pred_groups) {
      auto it = gold_groups.find(label);
      if (it == gold_groups.end()) continue;
      for (const auto &[pe, cp] : pred_ends) {
        for (const auto &[ge, cg] : it->second) {
          int gain = std::min(cp, cg);
          pairs_[Cell(pe.first, ge.first)].push_back({pe.second, ge.second, gain});
          pairs_[Cell(pe.second, ge.second)].push_back({pe.first, ge.first, gain});
        }
      }
    }
  }

  VariableIndex pred_vars_;
  VariableIndex gold_vars_;
  int n_ = 0;
  int m_ = 0;
  std::vector<int> unary_;
  std::vector<std::vector<PairGain>> pairs_;
};

class HillClimber {
 public:
  explicit HillClimber(const MatchProblem &problem) : p_(problem) {}

  // Climbs from `mapping` to a local optimum and returns its score.
  int Climb(std::vector<int> *mapping) {
    std::vector<int> &map = *mapping;
    std::vector<int> owner(static_cast<std::size_t>(p_.m()), kUnmapped);
    for (int i = 0; i < p_.n(); ++i) {
      if (map[static_cast<std::size_t>(i)] != kUnmapped) {
        owner[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = i;
      }
    }
    int score = p_.Score(map);
    while (true) {
      int best_delta = 0;
      int move_i = kUnmapped;
      int move_j = kUnmapped;
      int swap_with = kUnmapped;
      for (int i = 0; i < p_.n(); ++i) {
        const int cur = map[static_cast<std::size_t>(i)];
        const int base = p_.Unary(i, cur) + p_.PairSum(i, cur, map, i, kUnmapped);
        for (int j = 0; j < p_.m(); ++j) {
          if (owner[static_cast<std::size_t>(j)] != kUnmapped) continue;
          int delta = p_.Unary(i, j) + p_.PairSum(i, j, map, i, kUnmapped) - base;
          if (delta > best_delta) {
            best_delta = delta;
            move_i = i;
            move_j = j;
            swap_with = kUnmapped;
          }
        }
      }
      for (int a = 0; a < p_.n(); ++a) {
        const int ja = map[static_cast<std::size_t>(a)];
        for (int b = a + 1; b < p_.n(); ++b) {
          const int jb = map[static_cast<std::size_t>(b)];
          if (ja == jb) continue;  // both unmapped
          int delta = SwapDelta(map, a, ja, b, jb);
          if (delta > best_delta) {
            best_delta = delta;
            move_i = a;
            move_j = kUnmapped;
            swap_with = b;
          }
        }
      }
      if (best_delta <= 0) break;
      if (swap_with != kUnmapped) {
        const int ja = map[static_cast<std::size_t>(move_i)];
        const int jb = map[static_cast<std::size_t>(swap_with)];
        map[static_cast<std::size_t>(move_i)] = jb;
        map[static_cast<std::size_t>(swap_with)] = ja;
        if (ja != kUnmapped) owner[static_cast<std::size_t>(ja)] = swap_with;
        if (jb != kUnmapped) owner[static_cast<std::size_t>(jb)] = move_i;
      } else {
        const int old = map[static_cast<std::size_t>(move_i)];
        if (old != kUnmapped) owner[static_cast<std::size_t>(old)] = kUnmapped;
        map[static_cast<std::size_t>(move_i)] = move_j;
        owner[static_cast<std::size_t>(move_j)] = move_i;
      }
      score += best_delta;
    }
    return score;
  }

 private:
  int SwapDelta(const std::vector<int> &map, int a, int ja, int b, int jb) const {
    int before = p_.Unary(a, ja) + p_.Unary(b, jb) +
                 p_.PairSum(a, ja, map, a, b) + p_.PairSum(b, jb, map, a, b) +
                 p_.CrossGain(a, ja, b, jb);
    int after = p_.Unary(a, jb) + p_.Unary(b, ja) +
                p_.PairSum(a, jb, map, a, b) + p_.PairSum(b, ja, map, a, b) +
                p_.CrossGain(a, jb, b, ja);
    return after - before;
  }

  const MatchProblem &p_;
};

std::vector<int> ConceptSeed(const MatchProblem &p) {
  std::vector<int> map(static_cast<std::size_t>(p.n()), kUnmapped);
  std::vector<bool> used(static_cast<std::size_t>(p.m()), false);
  for (int i = 0; i < p.n(); ++i) {
    int best = kUnmapped;
    int best_gain = 0;
    for (int j = 0; j < p.m(); ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      if (p.Unary(i, j) > best_gain) {
        best_gain = p.Unary(i, j);
        best = j;
      }
    }
    if (best != kUnmapped) {
      map[static_cast<std::size_t>(i)] = best;
      used[static_cast<std::size_t>(best)] = true;
    }
  }
  return map;
}

std::vector<int> RandomSeed(const MatchProblem &p, Rng *rng) {
  std::vector<int> preds(static_cast<std::size_t>(p.n()));
  std::vector<int> golds(static_cast<std::size_t>(p.m()));
  std::iota(preds.begin(), preds.end(), 0);
  std::iota(golds.begin(), golds.end(), 0);
  rng->Shuffle(&preds);
  rng->Shuffle(&golds);
  std::vector<int> map(static_cast<std::size_t>(p.n()), kUnmapped);
  for (std::size_t t = 0; t < std::min(preds.size(), golds.size()); ++t) {
    map[static_cast<std::size_t>(preds[t])] = golds[t];
  }
  return map;
}

std::size_t BagOverlap(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::string> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(common));
  return common.size();
}

void CheckCorpus(std::span<const AmrGraph> pred, std::span<const AmrGraph> gold) {
  if (pred.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predicted corpus has " + std::to_string(pred.size()) +
                    " AMRs but gold has " + std::to_string(gold.size()));
  }
  if (pred.empty()) throw Error(ErrorCode::kEmptyCorpus, "empty corpus");
}

// Restrict to triples satisfying `keep`, with the variables they mention.
template <typename Pred>
TripleSet Filter(const TripleSet &in, Pred keep) {
  TripleSet out;
  std::unordered_set<std::string> seen;
  for (const Triple &t : in.triples) {
    if (!keep(t)) continue;
    out.triples.push_back(t);
  }
  for (const std::string &v : in.variables) {
    for (const Triple &t : out.triples) {
      if (t.arg1 == v || (t.kind == TripleKind::kRelation && t.arg2 == v)) {
        if (seen.insert(v).second) out.variables.push_back(v);
        break;
      }
    }
  }
  return out;
}

// Relation triples selected by `keep` plus the instance triples of the
// variables they connect.
template <typename Pred>
TripleSet RelationsWithInstances(const TripleSet &in, Pred keep) {
  std::unordered_set<std::string> incident;
  for (const Triple &t : in.triples) {
    if (t.kind == TripleKind::kRelation && keep(t)) {
      incident.insert(t.arg1);
      incident.insert(t.arg2);
    }
  }
  return Filter(in, [&](const Triple &t) {
    if (t.kind == TripleKind::kRelation) return keep(t);
    return t.kind == TripleKind::kInstance && incident.count(t.arg1) > 0;
  });
}

}  // namespace

// ScoreReport.

ScoreReport ScoreReport::FromCounts(std::size_t matched, std::size_t pred_total,
                                    std::size_t gold_total) {
  ScoreReport r;
  r.matched = matched;
  r.pred_total = pred_total;
  r.gold_total = gold_total;
  r.precision = pred_total == 0 ? 0.0 : static_cast<double>(matched) / pred_total;
  r.recall = gold_total == 0 ? 0.0 : static_cast<double>(matched) / gold_total;
  r.f = r.precision + r.recall == 0.0
            ? 0.0
            : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

ScoreReport &ScoreReport::operator+=(const ScoreReport &other) {
  *this = FromCounts(matched + other.matched, pred_total + other.pred_total,
                     gold_total + other.gold_total);
  return *this;
}

std::optional<std::string> VariableMapping::Lookup(std::string_view pred) const {
  for (const auto &[p, g] : pairs) {
    if (p == pred) return g;
  }
  return std::nullopt;
}

bool VariableMapping::IsInjective() const {
  std::unordered_set<std::string> preds;
  std::unordered_set<std::string> golds;
  for (const auto &[p, g] : pairs) {
    if (!preds.insert(p).second || !golds.insert(g).second) return false;
  }
  return true;
}

// Search.

SmatchResult SmatchTriples(const TripleSet &pred, const TripleSet &gold,
                           const SmatchOptions &options) {
  MatchProblem problem(pred, gold);
  HillClimber climber(problem);
  Rng rng(options.seed, options.stream);
  const int upper = static_cast<int>(std::min(pred.size(), gold.size()));

  std::vector<int> best_map(static_cast<std::size_t>(problem.n()), kUnmapped);
  int best = -1;
  const int restarts = std::max(1, options.restarts);
  for (int r = 0; r < restarts && best < upper; ++r) {
    std::vector<int> map = r == 0 ? ConceptSeed(problem) : RandomSeed(problem, &rng);
    int score = climber.Climb(&map);
    if (score > best) {
      best = score;
      best_map = std::move(map);
    }
  }

  SmatchResult result;
  for (int i = 0; i < problem.n(); ++i) {
    int j = best_map[static_cast<std::size_t>(i)];
    if (j != kUnmapped) {
      result.mapping.pairs.emplace_back(problem.pred_vars().id(i),
                                        problem.gold_vars().id(j));
    }
  }
  result.report = ScoreReport::FromCounts(static_cast<std::size_t>(std::max(best, 0)),
                                          pred.size(), gold.size());
  return result;
}

SmatchResult Smatch(const AmrGraph &pred, const AmrGraph &gold,
                    const SmatchOptions &options) {
  return SmatchTriples(ToTriples(pred, options.triples),
                       ToTriples(gold, options.triples), options);
}

std::size_t CountMatches(const TripleSet &pred, const TripleSet &gold,
                         const VariableMapping &mapping) {
  std::unordered_map<std::string, std::string> rename(mapping.pairs.begin(),
                                                      mapping.pairs.end());
  std::map<Triple, int> available;
  for (const Triple &t : gold.triples) ++available[t];
  std::size_t matched = 0;
  for (const Triple &t : pred.triples) {
    auto a = rename.find(t.arg1);
    if (a == rename.end()) continue;
    Triple mapped = t;
    mapped.arg1 = a->second;
    if (t.kind == TripleKind::kRelation) {
      auto b = rename.find(t.arg2);
      if (b == rename.end()) continue;
      mapped.arg2 = b->second;
    }
    auto it = available.find(mapped);
    if (it != available.end() && it->second > 0) {
      --it->second;
      ++matched;
    }
  }
  return matched;
}

ScoreReport SmatchOracleTriples(const TripleSet &pred, const TripleSet &gold) {
  VariableIndex pred_vars(pred);
  VariableIndex gold_vars(gold);
  const bool pred_smaller = pred_vars.size() <= gold_vars.size();
  const int small = pred_smaller ? pred_vars.size() : gold_vars.size();
  const int large = pred_smaller ? gold_vars.size() : pred_vars.size();
  double count = 1.0;
  for (int k = 0; k < small; ++k) count *= large - k;
  if (small > static_cast<int>(kOracleMaxVariables) || count > kOracleMaxMappings) {
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search over " + std::to_string(small) + " x " +
                    std::to_string(large) + " variables is too large");
  }

  // Adding a pair to a mapping never lowers its score, so total injections
  // of the smaller side dominate every partial mapping.
  std::vector<int> assignment(static_cast<std::size_t>(small), kUnmapped);
  std::vector<bool> used(static_cast<std::size_t>(large), false);
  std::size_t best = 0;
  auto evaluate = [&] {
    VariableMapping mapping;
    for (int s = 0; s < small; ++s) {
      int l = assignment[static_cast<std::size_t>(s)];
      if (pred_smaller) {
        mapping.pairs.emplace_back(pred_vars.id(s), gold_vars.id(l));
      } else {
        mapping.pairs.emplace_back(pred_vars.id(l), gold_vars.id(s));
      }
    }
    best = std::max(best, CountMatches(pred, gold, mapping));
  };
  auto recurse = [&](auto &&self, int s) -> void {
    if (s == small) {
      evaluate();
      return;
    }
    for (int l = 0; l < large; ++l) {
      if (used[static_cast<std::size_t>(l)]) continue;
      used[static_cast<std::size_t>(l)] = true;
      assignment[static_cast<std::size_t>(s)] = l;
      self(self, s + 1);
      used[static_cast<std::size_t>(l)] = false;
    }
  };
  recurse(recurse, 0);
  return ScoreReport::FromCounts(best, pred.size(), gold.size());
}

ScoreReport SmatchOracle(const AmrGraph &pred, const AmrGraph &gold,
                         const TripleOptions &options) {
  return SmatchOracleTriples(ToTriples(pred, options), ToTriples(gold, options));
}

ScoreReport CorpusSmatch(std::span<const AmrGraph> pred,
                         std::span<const AmrGraph> gold,
                         const SmatchOptions &options, int jobs,
                         std::vector<ScoreReport> *per_pair) {
  CheckCorpus(pred, gold);
  std::vector<ScoreReport> reports(pred.size());
  ParallelFor(pred.size(), jobs, [&](std::size_t i) {
    SmatchOptions pair_options = options;
    pair_options.stream = i;
    reports[i] = Smatch(pred[i], gold[i], pair_options).report;
  });
  ScoreReport total;
  for (const ScoreReport &r : reports) total += r;
  if (per_pair != nullptr) *per_pair = std::move(reports);
  return total;
}

// Fine-grained metrics.

std::span<const MetricKind> AllMetrics() {
  static constexpr std::array<MetricKind, 9> kAll = {
      MetricKind::kSmatch,        MetricKind::kUnlabeled,
      MetricKind::kNoWsd,         MetricKind::kConcepts,
      MetricKind::kNamedEntities, MetricKind::kWikification,
      MetricKind::kNegations,     MetricKind::kReentrancy,
      MetricKind::kSrl};
  return kAll;
}

std::string_view MetricName(MetricKind metric) {
  switch (metric) {
    case MetricKind::kSmatch: return "Smatch";
    case MetricKind::kUnlabeled: return "Unlabeled";
    case MetricKind::kNoWsd: return "No WSD";
    case MetricKind::kConcepts: return "Concepts";
    case MetricKind::kNamedEntities: return "Named Ent.";
    case MetricKind::kWikification: return "Wikification";
    case MetricKind::kNegations: return "Negations";
    case MetricKind::kReentrancy: return "Reentrancy";
    case MetricKind::kSrl: return "SRL";
  }
  return "";
}

std::optional<MetricKind> ParseMetricKind(std::string_view name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ' || c == '.') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "smatch") return MetricKind::kSmatch;
  if (key == "unlabeled") return MetricKind::kUnlabeled;
  if (key == "nowsd") return MetricKind::kNoWsd;
  if (key == "concepts") return MetricKind::kConcepts;
  if (key == "namedentities" || key == "namedent" || key == "ner") {
    return MetricKind::kNamedEntities;
  }
  if (key == "wikification" || key == "wiki") return MetricKind::kWikification;
  if (key == "negations" || key == "negation") return MetricKind::kNegations;
  if (key == "reentrancy" || key == "reentrancies") return MetricKind::kReentrancy;
  if (key == "srl") return MetricKind::kSrl;
  return std::nullopt;
}

bool IsBagMetric(MetricKind metric) {
  return metric == MetricKind::kConcepts || metric == MetricKind::kWikification;
}

std::string StripSense(std::string_view concept_name) {
  std::size_t dash = concept_name.rfind('-');
  if (dash == std::string_view::npos || concept_name.size() - dash - 1 < 2) {
    return std::string(concept_name);
  }
  for (std::size_t i = dash + 1; i < concept_name.size(); ++i) {
    if (concept_name[i] < '0' || concept_name[i] > '9') return std::string(concept_name);
  }
  return std::string(concept_name.substr(0, dash));
}

TripleSet ApplyMetric(const TripleSet &triples, MetricKind metric) {
  switch (metric) {
    case MetricKind::kSmatch:
    case MetricKind::kConcepts:
    case MetricKind::kWikification:
      return triples;
    case MetricKind::kUnlabeled: {
      TripleSet out = triples;
      for (Triple &t : out.triples) {
        if (t.kind == TripleKind::kInstance || t.label == "TOP") continue;
        t.label = "rel";
      }
      return out;
    }
    case MetricKind::kNoWsd: {
      TripleSet out = triples;
      for (Triple &t : out.triples) {
        if (t.kind == TripleKind::kInstance || t.label == "TOP") {
          t.arg2 = StripSense(t.arg2);
        }
      }
      return out;
    }
    case MetricKind::kNamedEntities: {
      std::unordered_set<std::string> entities;
      std::unordered_set<std::string> names;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::kRelation && t.label == "name") {
          entities.insert(t.arg1);
          names.insert(t.arg2);
        }
      }
      static const std::regex kOp("op[0-9]+");
      return Filter(triples, [&](const Triple &t) {
        if (t.kind == TripleKind::kInstance) return entities.count(t.arg1) > 0;
        return t.kind == TripleKind::kAttribute && names.count(t.arg1) > 0 &&
               std::regex_match(t.label, kOp);
      });
    }
    case MetricKind::kNegations: {
      std::unordered_set<std::string> negated;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::kAttribute && t.label == "polarity" &&
            t.arg2 == "-") {
          negated.insert(t.arg1);
        }
      }
      return Filter(triples, [&](const Triple &t) {
        if (t.kind == TripleKind::kInstance) return negated.count(t.arg1) > 0;
        return t.kind == TripleKind::kAttribute && t.label == "polarity" &&
               t.arg2 == "-";
      });
    }
    case MetricKind::kReentrancy: {
      std::unordered_map<std::string, int> in_degree;
      for (const Triple &t : triples.triples) {
        if (t.kind == TripleKind::kRelation) ++in_degree[t.arg2];
      }
      return RelationsWithInstances(triples, [&](const Triple &t) {
        return in_degree[t.arg2] >= 2;
      });
    }
    case MetricKind::kSrl: {
      static const std::regex kRole("ARG[0-9]+(-of)?");
      return RelationsWithInstances(triples, [&](const Triple &t) {
        return std::regex_match(t.label, kRole);
      });
    }
  }
  return triples;
}

std::vector<std::string> MetricBag(const TripleSet &triples, MetricKind metric) {
  std::vector<std::string> bag;
  for (const Triple &t : triples.triples) {
    if (metric == MetricKind::kConcepts && t.kind == TripleKind::kInstance) {
      bag.push_back(t.arg2);
    } else if (metric == MetricKind::kWikification &&
               t.kind == TripleKind::kAttribute && t.label == "wiki") {
      bag.push_back(t.arg2);
    }
  }
  return bag;
}

ScoreReport FineGrained(const AmrGraph &pred, const AmrGraph &gold,
                        MetricKind metric, const SmatchOptions &options) {
  TripleSet p = ToTriples(pred, options.triples);
  TripleSet g = ToTriples(gold, options.triples);
  if (IsBagMetric(metric)) {
    std::vector<std::string> pb = MetricBag(p, metric);
    std::vector<std::string> gb = MetricBag(g, metric);
    std::size_t ps = pb.size();
    std::size_t gs = gb.size();
    return ScoreReport::FromCounts(BagOverlap(std::move(pb), std::move(gb)), ps, gs);
  }
  return SmatchTriples(ApplyMetric(p, metric), ApplyMetric(g, metric), options)
      .report;
}

ScoreReport CorpusFineGrained(std::span<const AmrGraph> pred,
                              std::span<const AmrGraph> gold, MetricKind metric,
                              const SmatchOptions &options, int jobs) {
  CheckCorpus(pred, gold);
  std::vector<ScoreReport> reports(pred.size());
  ParallelFor(pred.size(), jobs, [&](std::size_t i) {
    SmatchOptions pair_options = options;
    pair_options.stream = i;
    reports[i] = FineGrained(pred[i], gold[i], metric, pair_options);
  });
  ScoreReport total;
  for (const ScoreReport &r : reports) total += r;
  return total;
}

}  // namespace amrsmith
