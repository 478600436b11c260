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

// Silver training data from two automatic parsers (CAMR and JAMR): drop
// invalid output, keep sentences on which the parsers agree, and mix the two
// sources at a chosen ratio.

#ifndef AMRSMITH_SILVER_H_
#define AMRSMITH_SILVER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amrsmith/amr.h"
#include "amrsmith/smatch.h"

namespace amrsmith {

enum class DropReason { kInvalid, kNullTag, kNullEdge, kLowAgreement };

std::string_view DropReasonName(DropReason reason);

enum class SilverSource { kCamr, kJamr };

std::string_view SilverSourceName(SilverSource source);

struct SilverCandidate {
  std::size_t index = 0;
  std::string sentence;
  std::string camr_text;
  std::string jamr_text;
  std::optional<AmrGraph> camr;  // empty when the text does not parse
  std::optional<AmrGraph> jamr;
  std::optional<double> agreement;  // SMATCH F on a 0-100 scale
};

// Parses both outputs. The sentence comes from the CAMR block's `::snt`,
// falling back to the JAMR block's.
SilverCandidate MakeCandidate(std::size_t index, std::string_view camr_text,
                              std::string_view jamr_text);

// True if `text` contains `token` delimited by anything other than
// letters, digits and '-'.
bool ContainsToken(std::string_view text, std::string_view token);

// Invalid parses first, then `null-tag`, then `null-edge`.
std::optional<DropReason> ValidityFilter(const SilverCandidate &candidate);

inline constexpr double kDefaultThreshold = 55.0;

// Keep iff 100 * F > threshold (>= when inclusive), decided on the integer
// counts so that 11 of 20 vs 20 triples sits exactly on 55.
bool PassesAgreement(const ScoreReport &report, double threshold, bool inclusive);

struct MixSpec {
  std::size_t total = 0;
  double camr_fraction = 1.0;
  std::uint64_t seed = 0;
};

// Number of CAMR parses: fraction * total rounded half to even.
std::size_t CamrShare(const MixSpec &spec);

struct SilverRecord {
  std::size_t index = 0;
  std::string sentence;
  AmrGraph graph;
  SilverSource source = SilverSource::kCamr;
};

// Seeded sample of spec.total candidates; the first CamrShare of them get
// their CAMR parse, the rest their JAMR parse, then the output is shuffled.
// Throws Error(kInsufficientCandidates) when there are too few.
std::vector<SilverRecord> Mix(const std::vector<SilverCandidate> &kept,
                              const MixSpec &spec);

struct CurateOptions {
  MixSpec mix;
  double threshold = kDefaultThreshold;
  bool inclusive = false;
  int restarts = 4;
  int jobs = 1;
};

inline constexpr std::size_t kHistogramBins = 20;

struct CurationReport {
  std::size_t pairs = 0;
  std::size_t invalid = 0;
  std::size_t null_tag = 0;
  std::size_t null_edge = 0;
  std::size_t low_agreement = 0;
  std::size_t kept = 0;
  std::size_t camr = 0;
  std::size_t jamr = 0;
  double threshold = kDefaultThreshold;
  bool inclusive = false;
  // Agreement of every pair that passed validity, 5-point bins; 100 goes in
  // the last bin.
  std::array<std::size_t, kHistogramBins> histogram{};

  std::string ToJson() const;
};

struct CurationResult {
  std::vector<SilverRecord> records;
  CurationReport report;
};

// Validity, agreement, mix. Throws Error(kAlignmentMismatch) when the files
// hold different numbers of blocks. Empty inputs give an empty result.
CurationResult Curate(std::istream &camr, std::istream &jamr,
                      const CurateOptions &options);
CurationResult Curate(const std::vector<std::string> &camr_blocks,
                      const std::vector<std::string> &jamr_blocks,
                      const CurateOptions &options);

// Corpus block with `::snt` and `::silver-source` metadata.
void WriteSilverRecord(std::ostream &out, const SilverRecord &record);

}  // namespace amrsmith

#endif  // AMRSMITH_SILVER_H_
