// paradial/annotations.hpp

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

#ifndef PARADIAL_ANNOTATIONS_HPP_
#define PARADIAL_ANNOTATIONS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paradial/corpus.hpp"
#include "paradial/types.hpp"

namespace paradial::annotations {

struct Annotation {
  std::string pair_id;
  std::string annotator_id;
  bool is_paraphrase = false;
  WordSet guest_highlight;
  WordSet host_highlight;
  // Name of the annotation set the pair belongs to (e.g. "BALANCED").
  std::optional<std::string> dataset;

  const WordSet& highlight(Side side) const {
    return side == Side::kGuest ? guest_highlight : host_highlight;
  }
};

struct AggregatedPair {
  std::string pair_id;
  std::size_t n_annotations = 0;
  std::size_t positive_votes = 0;
  bool is_paraphrase = false;
  double vote_entropy = 0.0;  // bits
  WordSet guest_gold;
  WordSet host_gold;
  std::optional<std::string> dataset;

  const WordSet& gold(Side side) const {
    return side == Side::kGuest ? guest_gold : host_gold;
  }
};

enum class ValidationMode { kStrict, kLenient };

enum class ViolationKind {
  kIndexOutOfRange,
  kParaphraseWithoutHighlight,
  kHighlightWithoutParaphrase,
  kDuplicateRecord,
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string pair_id;
  std::string annotator_id;
  std::string detail;
};

struct ValidationReport {
  ValidationMode mode = ValidationMode::kStrict;
  std::vector<Violation> violations;

  // Strict mode fails on any violation; lenient mode only reports.
  bool passed() const {
    return mode == ValidationMode::kLenient || violations.empty();
  }
};

// Throws ValidationError when an annotation references an unknown pair_id.
ValidationReport validate(std::span<const Annotation> annotations,
                          std::span<const corpus::UtterancePair> pairs,
                          ValidationMode mode);

// Without utterances: index bounds and pair ids are not checked.
ValidationReport validate(std::span<const Annotation> annotations,
                          ValidationMode mode);

struct MajorityLabel {
  bool is_paraphrase = false;
  std::size_t positive_votes = 0;
  std::size_t n = 0;
};

// Strict majority; exact ties are not paraphrases. Throws on empty input.
MajorityLabel majority_label(const std::vector<bool>& votes);

enum class HighlightBasis {
  kAllAnnotators,     // denominator: every annotator of the pair
  kParaphraseVoters,  // denominator: annotators who voted paraphrase
};

// Words highlighted by strictly more than half of the basis annotators.
WordSet majority_highlight(std::span<const Annotation> pair_annotations,
                           Side side,
                           HighlightBasis basis = HighlightBasis::kAllAnnotators);

struct AggregateOptions {
  HighlightBasis basis = HighlightBasis::kAllAnnotators;
  unsigned threads = 1;
};

// One AggregatedPair per annotated pair, in the order of `pairs`. Only the
// first record of a duplicated (pair_id, annotator_id) is counted. Throws
// ValidationError for annotations whose pair is not in `pairs`.
std::vector<AggregatedPair> aggregate(
    std::span<const corpus::UtterancePair> pairs,
    std::span<const Annotation> annotations,
    const AggregateOptions& options = {});

// Same, without a pairs list: output is ordered by pair_id.
std::vector<AggregatedPair> aggregate(std::span<const Annotation> annotations,
                                      const AggregateOptions& options = {});

struct DatasetStatistics {
  std::string dataset;
  std::size_t n_pairs = 0;
  std::size_t n_paraphrases = 0;
  std::size_t n_annotations = 0;
  double mean_annotations = 0.0;
};

// Per-dataset rows (sorted by name; pairs without a dataset are grouped under
// "UNLABELED") followed by a "TOTAL" row.
std::vector<DatasetStatistics> dataset_statistics(
    std::span<const AggregatedPair> aggregated);

// Annotations grouped by pair with the word counts of both utterances, the
// input shape for the highlight agreement statistics.
struct AnnotatedPair {
  std::string pair_id;
  std::size_t guest_words = 0;
  std::size_t host_words = 0;
  std::vector<Annotation> annotations;

  std::size_t words(Side side) const {
    return side == Side::kGuest ? guest_words : host_words;
  }
};

// Keeps the first record per (pair_id, annotator_id); pairs keep the order of
// `pairs` and only annotated pairs are returned.
std::vector<AnnotatedPair> group_by_pair(
    std::span<const corpus::UtterancePair> pairs,
    std::span<const Annotation> annotations);

// Without utterances: word counts stay 0, pairs in order of first appearance.
std::vector<AnnotatedPair> group_by_pair(
    std::span<const Annotation> annotations);

}  // namespace paradial::annotations

#endif  // PARADIAL_ANNOTATIONS_HPP_
