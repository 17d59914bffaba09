// paradial/evaluation.hpp

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

#ifndef PARADIAL_EVALUATION_HPP_
#define PARADIAL_EVALUATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paradial/annotations.hpp"
#include "paradial/corpus.hpp"
#include "paradial/response_parser.hpp"

namespace paradial::evaluation {

using response::ExtractionError;
using response::Extracted;
using response::Prediction;

struct ItemOutcome {
  std::string pair_id;
  Extracted<Prediction> outcome;
};

struct ClassificationScores {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Positive class is paraphrase. Extraction errors count as negatives. Every
// gold pair needs exactly one outcome; ValidationError lists the missing ids.
ClassificationScores classification_metrics(
    std::span<const ItemOutcome> outcomes,
    std::span<const annotations::AggregatedPair> gold);

enum class JaccardDenominator {
  kGoldPositive,  // errors and negative predictions contribute empty sets
  kBothPositive,
};

struct HighlightScores {
  std::size_t n_pairs = 0;
  std::optional<double> guest;
  std::optional<double> host;
};

HighlightScores highlight_jaccard(
    std::span<const ItemOutcome> outcomes,
    std::span<const annotations::AggregatedPair> gold,
    JaccardDenominator denominator = JaccardDenominator::kGoldPositive);

struct TokenProbPrediction {
  std::string pair_id;
  std::vector<double> guest_probs;
  std::vector<double> host_probs;
};

struct Thresholds {
  double tau_cls = 0.5;
  double tau_hl = 0.5;
};

// Throws UsageError when a threshold is outside (0, 1].
void check_thresholds(const Thresholds& t);

// Positive when both sides have a probability >= tau_cls. Highlights are the
// words with probability >= min(tau_hl, tau_cls), so a positive prediction
// never has an empty side. With a pair the lengths are checked against its
// word counts (ValidationError on mismatch).
Prediction threshold_token_probs(const TokenProbPrediction& tp,
                                 const Thresholds& thresholds = {},
                                 const corpus::UtterancePair* pair = nullptr);

// Share of outcomes that are extraction errors. Throws on empty input.
double extraction_error_rate(std::span<const ItemOutcome> outcomes);

struct EvalReport {
  std::string system;
  std::size_t n_items = 0;
  ClassificationScores classification;
  HighlightScores highlights;
  std::optional<double> extraction_error_rate;    // undefined for token probs
  std::optional<double> classification_error_rate;
  std::optional<double> call_error_rate;
  std::map<std::string, std::size_t> errors_by_kind;
};

struct EvalInput {
  std::string system;
  std::vector<ItemOutcome> outcomes;
  bool generative = true;
  // Per-call outcomes, when available, for the per-call error rate.
  std::optional<std::size_t> n_calls;
  std::optional<std::size_t> n_call_errors;
};

EvalReport evaluate(const EvalInput& input,
                    std::span<const annotations::AggregatedPair> gold,
                    JaccardDenominator denominator =
                        JaccardDenominator::kGoldPositive);

// One row of the results table. Rates are fractions; missing values print
// as "-".
struct TableRow {
  std::string model;
  std::optional<double> classification_extract;
  std::optional<double> f1;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> highlight_extract;
  std::optional<double> jaccard_guest;
  std::optional<double> jaccard_host;

  bool operator==(const TableRow&) const = default;
};

TableRow table_row(const EvalReport& report);

// Pipe table with a header row. Scores to 2 decimals, rates as whole
// percentages.
std::string format_table(std::span<const TableRow> rows);

// Reads a table written by format_table. Throws FormatError.
std::vector<TableRow> parse_table(std::string_view table);

// Rounds a row to the precision format_table prints.
TableRow rounded(const TableRow& row);

}  // namespace paradial::evaluation

#endif  // PARADIAL_EVALUATION_HPP_
