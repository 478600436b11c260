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

#include "amrsmith/silver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include <json.hpp>

#include "amrsmith/error.h"
#include "amrsmith/parallel.h"
#include "amrsmith/random.h"

namespace amrsmith {

namespace {

bool IsTokenChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-';
}

std::optional<AmrGraph> TryParse(std::string_view text) {
  try {
    return ParseAmr(text);
  } catch (const Error &) {
    return std::nullopt;
  }
}

// The AMR part of a block, without its comment lines.
std::string AmrBody(std::string_view text) {
  std::string out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] != '#') {
      out.append(line);
      out += '\n';
    }
    start = end + 1;
  }
  return out;
}

std::vector<std::string> ReadBlocks(std::istream &in) {
  BlockReader reader(in);
  std::vector<std::string> out;
  CorpusBlock block;
  while (reader.Next(&block)) out.push_back(std::move(block.text));
  return out;
}

}  // namespace

std::string_view DropReasonName(DropReason reason) {
  switch (reason) {
    case DropReason::kInvalid: return "invalid";
    case DropReason::kNullTag: return "null-tag";
    case DropReason::kNullEdge: return "null-edge";
    case DropReason::kLowAgreement: return "low-agreement";
  }
  return "unknown";
}

std::string_view SilverSourceName(SilverSource source) {
  return source == SilverSource::kCamr ? "camr" : "jamr";
}

SilverCandidate MakeCandidate(std::size_t index, std::string_view camr_text,
                              std::string_view jamr_text) {
  SilverCandidate c;
  c.index = index;
  c.camr_text = std::string(camr_text);
  c.jamr_text = std::string(jamr_text);
  c.camr = TryParse(camr_text);
  c.jamr = TryParse(jamr_text);
  std::optional<std::string> snt;
  if (c.camr) snt = c.camr->metadata().Get("snt");
  if (!snt && c.jamr) snt = c.jamr->metadata().Get("snt");
  c.sentence = snt.value_or("");
  return c;
}

bool ContainsToken(std::string_view text, std::string_view token) {
  std::size_t pos = text.find(token);
  while (pos != std::string_view::npos) {
    const bool left = pos == 0 || !IsTokenChar(text[pos - 1]);
    const std::size_t end = pos + token.size();
    const bool right = end == text.size() || !IsTokenChar(text[end]);
    if (left && right) return true;
    pos = text.find(token, pos + 1);
  }
  return false;
}

std::optional<DropReason> ValidityFilter(const SilverCandidate &candidate) {
  if (!candidate.camr || !candidate.jamr) return DropReason::kInvalid;
  const std::string camr = AmrBody(candidate.camr_text);
  const std::string jamr = AmrBody(candidate.jamr_text);
  if (ContainsToken(camr, "null-tag") || ContainsToken(jamr, "null-tag")) {
    return DropReason::kNullTag;
  }
  if (ContainsToken(camr, "null-edge") || ContainsToken(jamr, "null-edge")) {
    return DropReason::kNullEdge;
  }
  return std::nullopt;
}

bool PassesAgreement(const ScoreReport &report, double threshold, bool inclusive) {
  const double lhs = 200.0 * static_cast<double>(report.matched);
  const double rhs =
      threshold * static_cast<double>(report.pred_total + report.gold_total);
  return inclusive ? lhs >= rhs : lhs > rhs;
}

std::size_t CamrShare(const MixSpec &spec) {
  if (!(spec.camr_fraction >= 0.0 && spec.camr_fraction <= 1.0)) {
    throw Error(ErrorCode::kMalformedEntry, "camr fraction must be within [0, 1]");
  }
  // nearbyint follows the current rounding mode, which defaults to
  // round-half-to-even.
  return static_cast<std::size_t>(
      std::nearbyint(spec.camr_fraction * static_cast<double>(spec.total)));
}

std::vector<SilverRecord> Mix(const std::vector<SilverCandidate> &kept,
                              const MixSpec &spec) {
  const std::size_t camr_count = CamrShare(spec);
  if (kept.size() < spec.total) {
    throw Error(ErrorCode::kInsufficientCandidates,
                "need " + std::to_string(spec.total) + " candidates, have " +
                    std::to_string(kept.size()));
  }
  std::vector<std::size_t> order(kept.size());
  std::iota(order.begin(), order.end(), 0);
  Rng sample(spec.seed, 0);
  sample.Shuffle(&order);
  order.resize(spec.total);

  std::vector<SilverRecord> out;
  out.reserve(spec.total);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const SilverCandidate &c = kept[order[k]];
    const bool use_camr = k < camr_count;
    const std::optional<AmrGraph> &graph = use_camr ? c.camr : c.jamr;
    if (!graph) {
      throw Error(ErrorCode::kMalformedEntry,
                  "candidate " + std::to_string(c.index) + " has no valid " +
                      std::string(use_camr ? "camr" : "jamr") + " parse");
    }
    out.push_back({c.index, c.sentence, *graph,
                   use_camr ? SilverSource::kCamr : SilverSource::kJamr});
  }
  Rng shuffle(spec.seed, 1);
  shuffle.Shuffle(&out);
  return out;
}

std::string CurationReport::ToJson() const {
  nlohmann::ordered_json j;
  j["pairs"] = pairs;
  j["dropped"] = {{"invalid", invalid},
                  {"null-tag", null_tag},
                  {"null-edge", null_edge},
                  {"low-agreement", low_agreement}};
  j["kept"] = kept;
  j["selected"] = {{"camr", camr}, {"jamr", jamr}};
  j["threshold"] = threshold;
  j["inclusive"] = inclusive;
  nlohmann::ordered_json bins = nlohmann::ordered_json::array();
  for (std::size_t b = 0; b < kHistogramBins; ++b) {
    bins.push_back({{"low", 5.0 * static_cast<double>(b)},
                    {"high", 5.0 * static_cast<double>(b + 1)},
                    {"count", histogram[b]}});
  }
  j["agreement_histogram"] = std::move(bins);
  return j.dump(2);
}

CurationResult Curate(std::istream &camr, std::istream &jamr,
                      const CurateOptions &options) {
  return Curate(ReadBlocks(camr), ReadBlocks(jamr), options);
}

CurationResult Curate(const std::vector<std::string> &camr_blocks,
                      const std::vector<std::string> &jamr_blocks,
                      const CurateOptions &options) {
  if (camr_blocks.size() != jamr_blocks.size()) {
    throw Error(ErrorCode::kAlignmentMismatch,
                "camr has " + std::to_string(camr_blocks.size()) +
                    " AMRs but jamr has " + std::to_string(jamr_blocks.size()));
  }
  CurationResult result;
  CurationReport &report = result.report;
  report.pairs = camr_blocks.size();
  report.threshold = options.threshold;
  report.inclusive = options.inclusive;
  if (camr_blocks.empty()) return result;

  std::vector<SilverCandidate> candidates(camr_blocks.size());
  std::vector<std::optional<DropReason>> verdicts(camr_blocks.size());
  std::vector<ScoreReport> scores(camr_blocks.size());
  ParallelFor(camr_blocks.size(), options.jobs, [&](std::size_t i) {
    candidates[i] = MakeCandidate(i, camr_blocks[i], jamr_blocks[i]);
    verdicts[i] = ValidityFilter(candidates[i]);
    if (verdicts[i]) return;
    SmatchOptions smatch;
    smatch.restarts = options.restarts;
    smatch.seed = options.mix.seed;
    smatch.stream = i;
    scores[i] = Smatch(*candidates[i].camr, *candidates[i].jamr, smatch).report;
    candidates[i].agreement = 100.0 * scores[i].f;
    if (!PassesAgreement(scores[i], options.threshold, options.inclusive)) {
      verdicts[i] = DropReason::kLowAgreement;
    }
  });

  std::vector<SilverCandidate> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].agreement) {
      const auto bin = static_cast<std::size_t>(*candidates[i].agreement / 5.0);
      ++report.histogram[std::min(bin, kHistogramBins - 1)];
    }
    if (!verdicts[i]) {
      kept.push_back(std::move(candidates[i]));
      continue;
    }
    switch (*verdicts[i]) {
      case DropReason::kInvalid: ++report.invalid; break;
      case DropReason::kNullTag: ++report.null_tag; break;
      case DropReason::kNullEdge: ++report.null_edge; break;
      case DropReason::kLowAgreement: ++report.low_agreement; break;
    }
  }
  report.kept = kept.size();
  result.records = Mix(kept, options.mix);
  for (const SilverRecord &r : result.records) {
    ++(r.source == SilverSource::kCamr ? report.camr : report.jamr);
  }
  return result;
}

void WriteSilverRecord(std::ostream &out, const SilverRecord &record) {
  AmrGraph graph = record.graph;
  if (!record.sentence.empty()) graph.mutable_metadata().Set("snt", record.sentence);
  graph.mutable_metadata().Set("silver-source", SilverSourceName(record.source));
  WriteAmrBlock(out, graph);
}

}  // namespace amrsmith
