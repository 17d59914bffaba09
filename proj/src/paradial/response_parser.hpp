// paradial/response_parser.hpp

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

#ifndef PARADIAL_RESPONSE_PARSER_HPP_
#define PARADIAL_RESPONSE_PARSER_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paradial/corpus.hpp"
#include "paradial/types.hpp"

namespace paradial::response {

enum class ExtractionErrorKind {
  kMissingClassification,
  kInconsistentHighlighting,
  kHallucinatedQuote,
  kUnparseable,
};

inline constexpr ExtractionErrorKind kAllErrorKinds[] = {
    ExtractionErrorKind::kMissingClassification,
    ExtractionErrorKind::kInconsistentHighlighting,
    ExtractionErrorKind::kHallucinatedQuote,
    ExtractionErrorKind::kUnparseable,
};

std::string_view error_kind_name(ExtractionErrorKind kind);

// Throws FormatError on unknown names.
ExtractionErrorKind parse_error_kind(std::string_view name);

struct ExtractionError {
  ExtractionErrorKind kind = ExtractionErrorKind::kUnparseable;
  std::string detail;

  bool operator==(const ExtractionError&) const = default;
};

struct ParsedResponse {
  std::optional<bool> classification;
  std::vector<std::string> guest_quotes;
  std::vector<std::string> host_quotes;
  std::string explanation;

  const std::vector<std::string>& quotes(Side side) const {
    return side == Side::kGuest ? guest_quotes : host_quotes;
  }
  bool operator==(const ParsedResponse&) const = default;
};

struct Prediction {
  std::string pair_id;
  bool label = false;
  WordSet guest_words;
  WordSet host_words;

  const WordSet& words(Side side) const {
    return side == Side::kGuest ? guest_words : host_words;
  }
  bool operator==(const Prediction&) const = default;
};

template <class T>
using Extracted = std::variant<T, ExtractionError>;

template <class T>
bool is_error(const Extracted<T>& e) {
  return std::holds_alternative<ExtractionError>(e);
}

// Splits the value of a quote field into quoted segments. A value without
// any double quote is returned as one segment; "None" gives no segments.
std::vector<std::string> split_quotes(std::string_view value);

// Reads the last Classification / Verbatim Quote Guest / Verbatim Quote Host
// lines of a model response. Returns kUnparseable when none of them is
// present and kMissingClassification when the classification line is absent
// or does not start with yes/no.
Extracted<ParsedResponse> parse_response(std::string_view raw);

// Inverse of parse_response for well-formed input.
std::string render_response(const ParsedResponse& parsed);

struct MatchOptions {
  std::size_t max_gap = 3;
  double min_coverage = 0.8;
};

// Throws UsageError when min_coverage is outside (0, 1].
void check_match_options(const MatchOptions& options);

// Locates a quote in a source utterance. Tokens are compared after
// lowercasing and stripping punctuation; tokens that normalize to nothing
// are ignored. An exact contiguous occurrence wins (leftmost); otherwise the
// leftmost start admitting a monotone alignment with at most max_gap skipped
// source tokens between matches and coverage >= min_coverage. Indices refer
// to whitespace tokens of the source.
std::optional<WordSet> match_quote(std::string_view quote,
                                   std::string_view source,
                                   const MatchOptions& options = {});

Extracted<Prediction> resolve(const ParsedResponse& parsed,
                              const corpus::UtterancePair& pair,
                              const MatchOptions& options = {});

// Majority over resolved responses (ties negative). Highlights come from the
// winning response with the most matched words. With no resolved response
// the most frequent error kind is returned (earliest on ties).
Extracted<Prediction> self_consistency(
    std::span<const Extracted<Prediction>> resolved);

}  // namespace paradial::response

#endif  // PARADIAL_RESPONSE_PARSER_HPP_
