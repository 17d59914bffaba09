// paradial/serialization.hpp

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

#ifndef PARADIAL_SERIALIZATION_HPP_
#define PARADIAL_SERIALIZATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "paradial/allocation.hpp"
#include "paradial/annotations.hpp"
#include "paradial/corpus.hpp"
#include "paradial/evaluation.hpp"
#include "paradial/metrics.hpp"
#include "paradial/response_parser.hpp"

namespace paradial::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);

// Writes to a temporary file next to `path` and renames it into place.
void write_atomic(const std::string& path, std::string_view content);

Json parse_json(std::string_view content, std::string_view origin);
Json read_json(const std::string& path);

// One JSON value per non-blank line. Errors name origin and line.
struct JsonlRecord {
  std::size_t line = 0;
  Json value;
};
std::vector<JsonlRecord> parse_jsonl(std::string_view content,
                                     std::string_view origin);
std::vector<JsonlRecord> read_jsonl(const std::string& path);

std::string to_jsonl(const std::vector<Json>& values);

// Pretty-printed document with a trailing newline.
std::string dump_document(const Json& doc);

// Converts every record with `convert`, prefixing errors with file:line.
template <class F>
auto convert_records(const std::vector<JsonlRecord>& records,
                     std::string_view origin, F convert)
    -> std::vector<decltype(convert(records.front().value))>;

corpus::Interview interview_from_json(const Json& j);

Json to_json(const corpus::UtterancePair& p);
corpus::UtterancePair pair_from_json(const Json& j);

Json to_json(const annotations::Annotation& a);
annotations::Annotation annotation_from_json(const Json& j);

Json to_json(const annotations::AggregatedPair& g);
annotations::AggregatedPair gold_from_json(const Json& j);

Json to_json(const annotations::DatasetStatistics& s);
Json to_json(const annotations::ValidationReport& r, std::size_t max_listed);

Json to_json(const metrics::AgreementReport& r);
Json to_json(const allocation::StrategyRow& row);

// Raw model responses or a pre-parsed answer for one pair.
struct PredictionRecord {
  std::string pair_id;
  std::vector<std::string> responses;
  std::optional<response::ParsedResponse> parsed;
};
PredictionRecord prediction_record_from_json(const Json& j);

// Final outcome of one pair after self-consistency.
struct ResolvedRecord {
  std::string pair_id;
  response::Extracted<response::Prediction> outcome;
  std::size_t n_calls = 0;
  std::size_t n_call_errors = 0;
};
Json to_json(const ResolvedRecord& r);
ResolvedRecord resolved_from_json(const Json& j);

Json call_error_json(const std::string& pair_id,
                     std::optional<std::size_t> response_index,
                     const response::ExtractionError& e);

evaluation::TokenProbPrediction token_probs_from_json(const Json& j);

Json to_json(const evaluation::EvalReport& r);

Json word_set_json(const WordSet& s);
Json optional_json(const std::optional<double>& v);

}  // namespace paradial::io

#include "paradial/serialization_inl.hpp"

#endif  // PARADIAL_SERIALIZATION_HPP_
