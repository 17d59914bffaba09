// paradial/metrics.hpp

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

#ifndef PARADIAL_METRICS_HPP_
#define PARADIAL_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paradial/annotations.hpp"
#include "paradial/types.hpp"

namespace paradial::metrics {

// Binary labels of raters over items; cells may be missing.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(std::vector<std::string> items, std::vector<std::string> raters);

  // Items in order of first appearance, raters sorted by id.
  static LabelMatrix from_annotations(
      std::span<const annotations::Annotation> annotations);

  void set(std::size_t item, std::size_t rater, bool label);
  std::optional<bool> cell(std::size_t item, std::size_t rater) const;

  // Non-missing labels of one item, in rater order.
  std::vector<bool> item_labels(std::size_t item) const;

  const std::vector<std::string>& items() const { return items_; }
  const std::vector<std::string>& raters() const { return raters_; }
  std::size_t n_items() const { return items_.size(); }
  std::size_t n_raters() const { return raters_.size(); }

 private:
  std::vector<std::string> items_;
  std::vector<std::string> raters_;
  std::vector<std::int8_t> cells_;  // -1 missing, else 0/1
};

// |a ∩ b| / |a ∪ b|; two empty sets count as identical (1.0).
double jaccard(const WordSet& a, const WordSet& b);

// Krippendorff's alpha for nominal data from per-unit value counts:
// unit_counts[u][c] is how many raters assigned value c to unit u. Units with
// fewer than two values are not pairable and are ignored. Returns nullopt
// when the expected disagreement is zero or nothing is pairable.
std::optional<double> alpha_nominal_counts(
    std::span<const std::vector<std::size_t>> unit_counts);

// Throws ValidationError unless at least two items have two or more labels.
std::optional<double> alpha_nominal(const LabelMatrix& m);

// Mean over labelled cells of agreement with the majority of the item's other
// raters; a tied leave-one-out majority counts as half a match. Items with a
// single label are skipped; nullopt when nothing is left.
std::optional<double> loo_majority_accuracy(const LabelMatrix& m);

// Pairs that at least two annotators classified as paraphrase.
std::vector<const annotations::AnnotatedPair*> qualifying_pairs(
    std::span<const annotations::AnnotatedPair> pairs);

// Per-word alpha: one binary unit per (qualifying pair, word position), every
// annotator of the pair rating it highlighted / not highlighted.
std::optional<double> unitizing_alpha_words(
    std::span<const annotations::AnnotatedPair> pairs, Side side);

enum class JaccardPooling {
  kPerPairFirst,  // mean over annotator pairs within a pair, then over pairs
  kGlobal,        // mean over all annotator pairs of all pairs
};

// Compares only annotators with a nonempty highlight on `side`, within
// qualifying pairs. nullopt when no pair has two such annotators.
std::optional<double> mean_pairwise_jaccard(
    std::span<const annotations::AnnotatedPair> pairs, Side side,
    JaccardPooling pooling = JaccardPooling::kPerPairFirst);

// Binary entropy in bits of a positive/total split. Throws when total == 0 or
// positive > total.
double entropy_binary(std::size_t positive, std::size_t total);

struct KrrItem {
  std::string key;          // stream key, usually the pair_id
  std::vector<bool> labels; // labels available for this item
  std::size_t k = 0;        // subset size; items with k == 0 or 2k > labels are skipped
};

// k-rater reliability: for each resample and usable item, two disjoint random
// k-subsets are majority-voted (ties negative) and scored 1 if they agree.
// Returns the mean over items and resamples, nullopt without usable items.
std::optional<double> k_rater_reliability(std::span<const KrrItem> items,
                                          std::size_t resamples,
                                          std::uint64_t seed,
                                          unsigned threads = 1);

std::optional<double> k_rater_reliability(const LabelMatrix& m, std::size_t k,
                                          std::size_t resamples,
                                          std::uint64_t seed,
                                          unsigned threads = 1);

struct AgreementOptions {
  std::size_t krr_k = 1;
  std::size_t krr_resamples = 1000;
  std::uint64_t seed = 0;
  JaccardPooling jaccard_pooling = JaccardPooling::kPerPairFirst;
  unsigned threads = 1;
};

struct AgreementReport {
  std::string dataset;
  std::size_t n_items = 0;
  std::size_t n_annotations = 0;
  std::size_t n_qualifying_pairs = 0;
  std::optional<double> alpha_nominal;
  std::optional<double> loo_accuracy;
  std::optional<double> unitizing_alpha_guest;
  std::optional<double> unitizing_alpha_host;
  std::optional<double> mean_jaccard_guest;
  std::optional<double> mean_jaccard_host;
  std::optional<double> krr;
};

// Undefined statistics (including an alpha whose preconditions fail) are
// reported as nullopt.
AgreementReport agreement_report(
    std::string dataset, std::span<const annotations::AnnotatedPair> pairs,
    const AgreementOptions& options);

}  // namespace paradial::metrics

#endif  // PARADIAL_METRICS_HPP_
