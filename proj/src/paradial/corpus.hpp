// paradial/corpus.hpp

// Copyright 2026  The paradial Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef PARADIAL_CORPUS_HPP_
#define PARADIAL_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paradial::corpus {

enum class Program { kNpr, kCnn, kOther };

std::string_view program_name(Program program);

struct Turn {
  std::size_t speaker = 0;  // index into Interview::speaker_labels
  std::string text;
  std::size_t source_index = 0;  // position in the original utterance list
};

struct Interview {
  std::string id;
  Program program = Program::kOther;
  std::optional<std::string> date;
  std::string summary;
  std::vector<std::string> speaker_labels;
  std::vector<Turn> turns;
};

struct UtterancePair {
  std::string pair_id;
  std::string interview_id;
  std::size_t guest_turn_index = 0;
  std::string guest_speaker;
  std::string host_speaker;
  std::string guest_text;
  std::string host_text;
  std::string summary;
  std::optional<std::string> date;

  bool operator==(const UtterancePair&) const = default;
};

inline constexpr std::size_t kMinPairWords = 3;
inline constexpr std::size_t kMaxPairWords = 200;
inline constexpr std::size_t kMinInterviewTurns = 5;
inline constexpr std::size_t kTrimmedPairsPerEnd = 2;

std::string make_pair_id(std::string_view interview_id,
                         std::size_t guest_turn_index);

// Splits at the last '-'; interview ids themselves contain dashes ("NPR-4").
std::optional<std::pair<std::string, std::size_t>> parse_pair_id(
    std::string_view pair_id);

// Builds an Interview from parallel utterance / speaker lists (MediaSum
// layout). Speaker labels are listed in order of first appearance, so the
// first label is the speaker of the first turn. Throws FormatError when the
// lists are empty or differ in length.
Interview make_interview(std::string id, std::string_view program_field,
                         std::optional<std::string> date, std::string summary,
                         const std::vector<std::string>& utterances,
                         const std::vector<std::string>& speakers);

// Canonical label for each input label, in input order. Two labels share a
// canonical label iff they are connected by a chain of case-insensitive,
// trimmed substring relations; the canonical label is the longest member of
// the group (earliest on ties). Empty labels are never merged.
std::vector<std::string> canonical_speaker_labels(
    std::span<const std::string> labels);

// Rewrites speaker labels to their canonical form and remaps turns.
Interview canonicalize_speakers(Interview interview);

enum class TwoPersonVerdict { kKept, kNotTwoPerson, kSecondSpeakerIsHost };

// The first canonical speaker is taken as the host.
TwoPersonVerdict classify_two_person(const Interview& interview);

std::vector<Interview> filter_two_person(std::vector<Interview> interviews);

// Consecutive turns of the same speaker are joined with a single space.
std::vector<Turn> merge_consecutive_turns(const Interview& interview);

std::vector<UtterancePair> extract_pairs(const Interview& interview);

struct SampleResult {
  std::vector<UtterancePair> pairs;
  std::vector<std::string> warnings;
};

// Draws n_interviews interviews uniformly without replacement and keeps a
// window of at most max_consecutive consecutive pairs from each. Output is in
// draw order.
SampleResult sample_pairs(std::span<const UtterancePair> pairs,
                          std::size_t n_interviews,
                          std::size_t max_consecutive, std::uint64_t seed);

struct SplitRatios {
  double train = 0.70;
  double dev = 0.15;
  double test = 0.15;
};

struct DatasetSplit {
  std::vector<UtterancePair> train;
  std::vector<UtterancePair> dev;
  std::vector<UtterancePair> test;
};

// dev and test sizes are floor(n * ratio); the remainder goes to train. Each
// part keeps the input order.
DatasetSplit split_dataset(std::span<const UtterancePair> pairs,
                           SplitRatios ratios, std::uint64_t seed);

}  // namespace paradial::corpus

#endif  // PARADIAL_CORPUS_HPP_
