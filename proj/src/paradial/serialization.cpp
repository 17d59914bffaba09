// paradial/serialization.cpp

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

#include "paradial/serialization.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "paradial/errors.hpp"

namespace paradial::io {
namespace {

namespace fs = std::filesystem;

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("record is not a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  if (!j.is_object()) throw FormatError("record is not a JSON object");
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return nullptr;
  return &*it;
}

std::string get_string(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (v.is_string()) return v.get<std::string>();
  // Some corpora store numeric ids.
  if (v.is_number_integer()) return v.dump();
  throw FormatError(std::string("field '") + key + "' must be a string");
}

std::optional<std::string> get_optional_string(const Json& j, const char* key) {
  const Json* v = optional_field(j, key);
  if (v == nullptr) return std::nullopt;
  if (!v->is_string())
    throw FormatError(std::string("field '") + key + "' must be a string");
  return v->get<std::string>();
}

bool get_bool(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_boolean())
    throw FormatError(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

std::size_t get_count(const Json& v, const char* key) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<std::size_t>(v.get<long long>());
  throw FormatError(std::string("field '") + key +
                    "' must be a non-negative integer");
}

std::size_t get_count(const Json& j, const char* key, int) {
  return get_count(field(j, key), key);
}

double get_real(const Json& v, const char* key) {
  if (!v.is_number())
    throw FormatError(std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

WordSet get_word_set(const Json& j, const char* key) {
  const Json* v = optional_field(j, key);
  WordSet out;
  if (v == nullptr) return out;
  if (!v->is_array())
    throw FormatError(std::string("field '") + key + "' must be an array");
  for (const Json& e : *v) out.insert(get_count(e, key));
  return out;
}

std::vector<std::string> get_string_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array())
    throw FormatError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string())
      throw FormatError(std::string("field '") + key +
                        "' must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<double> get_real_list(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array())
    throw FormatError(std::string("field '") + key + "' must be an array");
  std::vector<double> out;
  for (const Json& e : v) out.push_back(get_real(e, key));
  return out;
}

Json optional_string_json(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path + ": " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path);
  return buf.str();
}

void write_atomic(const std::string& path, std::string_view content) {
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
    if (ec)
      throw IoError("cannot create directory " +
                    target.parent_path().string() + ": " + ec.message());
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out)
      throw IoError("cannot write " + tmp + ": " + std::strerror(errno));
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw IoError("error writing " + tmp);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw IoError("cannot rename " + tmp + " to " + path + ": " +
                  ec.message());
  }
}

Json parse_json(std::string_view content, std::string_view origin) {
  try {
    return Json::parse(content);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string(origin) + ": " + e.what());
  }
}

Json read_json(const std::string& path) {
  return parse_json(read_file(path), path);
}

std::vector<JsonlRecord> parse_jsonl(std::string_view content,
                                     std::string_view origin) {
  std::vector<JsonlRecord> out;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < content.size()) {
    std::size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    const std::string_view line = content.substr(start, nl - start);
    ++line_no;
    start = nl + 1;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      out.push_back(JsonlRecord{line_no, Json::parse(line)});
    } catch (const Json::parse_error& e) {
      throw FormatError(std::string(origin) + ":" + std::to_string(line_no) +
                        ": " + e.what());
    }
  }
  return out;
}

std::vector<JsonlRecord> read_jsonl(const std::string& path) {
  return parse_jsonl(read_file(path), path);
}

std::string to_jsonl(const std::vector<Json>& values) {
  std::string out;
  for (const Json& v : values) {
    out += v.dump(-1, ' ', false, Json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::string dump_document(const Json& doc) {
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

corpus::Interview interview_from_json(const Json& j) {
  std::string program;
  if (const Json* p = optional_field(j, "program")) {
    if (!p->is_string()) throw FormatError("field 'program' must be a string");
    program = p->get<std::string>();
  }
  std::string summary;
  if (const Json* s = optional_field(j, "summary")) {
    if (!s->is_string()) throw FormatError("field 'summary' must be a string");
    summary = s->get<std::string>();
  }
  return corpus::make_interview(get_string(j, "id"), program,
                                get_optional_string(j, "date"),
                                std::move(summary), get_string_list(j, "utt"),
                                get_string_list(j, "speaker"));
}

Json to_json(const corpus::UtterancePair& p) {
  Json j;
  j["pair_id"] = p.pair_id;
  j["interview_id"] = p.interview_id;
  j["guest_turn_index"] = p.guest_turn_index;
  j["guest_speaker"] = p.guest_speaker;
  j["host_speaker"] = p.host_speaker;
  j["guest_text"] = p.guest_text;
  j["host_text"] = p.host_text;
  j["summary"] = p.summary;
  j["date"] = optional_string_json(p.date);
  return j;
}

corpus::UtterancePair pair_from_json(const Json& j) {
  corpus::UtterancePair p;
  p.pair_id = get_string(j, "pair_id");
  p.guest_text = get_string(j, "guest_text");
  p.host_text = get_string(j, "host_text");
  const auto parsed = corpus::parse_pair_id(p.pair_id);
  if (optional_field(j, "interview_id")) {
    p.interview_id = get_string(j, "interview_id");
  } else if (parsed) {
    p.interview_id = parsed->first;
  } else {
    throw FormatError("pair_id '" + p.pair_id +
                      "' has no turn index and no interview_id is given");
  }
  if (const Json* t = optional_field(j, "guest_turn_index")) {
    p.guest_turn_index = get_count(*t, "guest_turn_index");
  } else if (parsed) {
    p.guest_turn_index = parsed->second;
  }
  if (auto s = get_optional_string(j, "guest_speaker")) p.guest_speaker = *s;
  if (auto s = get_optional_string(j, "host_speaker")) p.host_speaker = *s;
  if (auto s = get_optional_string(j, "summary")) p.summary = *s;
  p.date = get_optional_string(j, "date");
  return p;
}

Json to_json(const annotations::Annotation& a) {
  Json j;
  j["pair_id"] = a.pair_id;
  j["annotator_id"] = a.annotator_id;
  j["is_paraphrase"] = a.is_paraphrase;
  j["guest_highlight"] = word_set_json(a.guest_highlight);
  j["host_highlight"] = word_set_json(a.host_highlight);
  if (a.dataset) j["dataset"] = *a.dataset;
  return j;
}

annotations::Annotation annotation_from_json(const Json& j) {
  annotations::Annotation a;
  a.pair_id = get_string(j, "pair_id");
  a.annotator_id = get_string(j, "annotator_id");
  a.is_paraphrase = get_bool(j, "is_paraphrase");
  a.guest_highlight = get_word_set(j, "guest_highlight");
  a.host_highlight = get_word_set(j, "host_highlight");
  a.dataset = get_optional_string(j, "dataset");
  return a;
}

Json to_json(const annotations::AggregatedPair& g) {
  Json j;
  j["pair_id"] = g.pair_id;
  j["n_annotations"] = g.n_annotations;
  j["positive_votes"] = g.positive_votes;
  j["is_paraphrase"] = g.is_paraphrase;
  j["vote_entropy"] = g.vote_entropy;
  j["guest_gold"] = word_set_json(g.guest_gold);
  j["host_gold"] = word_set_json(g.host_gold);
  if (g.dataset) j["dataset"] = *g.dataset;
  return j;
}

annotations::AggregatedPair gold_from_json(const Json& j) {
  annotations::AggregatedPair g;
  g.pair_id = get_string(j, "pair_id");
  g.n_annotations = get_count(j, "n_annotations", 0);
  g.positive_votes = get_count(j, "positive_votes", 0);
  g.is_paraphrase = get_bool(j, "is_paraphrase");
  if (const Json* e = optional_field(j, "vote_entropy"))
    g.vote_entropy = get_real(*e, "vote_entropy");
  g.guest_gold = get_word_set(j, "guest_gold");
  g.host_gold = get_word_set(j, "host_gold");
  g.dataset = get_optional_string(j, "dataset");
  if (g.positive_votes > g.n_annotations)
    throw FormatError("positive_votes exceeds n_annotations for " + g.pair_id);
  if (!g.is_paraphrase && (!g.guest_gold.empty() || !g.host_gold.empty()))
    throw FormatError("non-paraphrase gold pair " + g.pair_id +
                      " has highlights");
  return g;
}

Json to_json(const annotations::DatasetStatistics& s) {
  Json j;
  j["dataset"] = s.dataset;
  j["n_pairs"] = s.n_pairs;
  j["n_paraphrases"] = s.n_paraphrases;
  j["n_annotations"] = s.n_annotations;
  j["mean_annotations"] = s.mean_annotations;
  return j;
}

Json to_json(const annotations::ValidationReport& r, std::size_t max_listed) {
  Json j;
  j["mode"] = r.mode == annotations::ValidationMode::kStrict ? "strict"
                                                             : "lenient";
  j["passed"] = r.passed();
  j["n_violations"] = r.violations.size();
  Json counts = Json::object();
  for (const auto& v : r.violations) {
    const std::string name(annotations::violation_name(v.kind));
    counts[name] = counts.value(name, 0) + 1;
  }
  j["by_kind"] = counts;
  Json listed = Json::array();
  for (std::size_t i = 0; i < r.violations.size() && i < max_listed; ++i) {
    const auto& v = r.violations[i];
    listed.push_back(Json{{"kind", annotations::violation_name(v.kind)},
                          {"pair_id", v.pair_id},
                          {"annotator_id", v.annotator_id},
                          {"detail", v.detail}});
  }
  j["violations"] = listed;
  return j;
}

Json to_json(const metrics::AgreementReport& r) {
  Json j;
  j["dataset"] = r.dataset;
  j["n_items"] = r.n_items;
  j["n_annotations"] = r.n_annotations;
  j["n_qualifying_pairs"] = r.n_qualifying_pairs;
  j["alpha_nominal"] = optional_json(r.alpha_nominal);
  j["loo_accuracy"] = optional_json(r.loo_accuracy);
  j["unitizing_alpha_guest"] = optional_json(r.unitizing_alpha_guest);
  j["unitizing_alpha_host"] = optional_json(r.unitizing_alpha_host);
  j["mean_jaccard_guest"] = optional_json(r.mean_jaccard_guest);
  j["mean_jaccard_host"] = optional_json(r.mean_jaccard_host);
  j["krr"] = optional_json(r.krr);
  return j;
}

Json to_json(const allocation::StrategyRow& row) {
  Json j;
  j["strategy"] = allocation::to_string(row.strategy);
  j["avg_annotators"] = row.avg_annotators;
  j["accuracy_vs_full"] = row.accuracy_vs_full;
  j["krr"] = optional_json(row.krr);
  j["admissible"] = row.admissible;
  Json seeds = Json::array();
  for (const auto& r : row.per_seed)
    seeds.push_back(Json{{"avg_annotators", r.avg_annotators},
                         {"accuracy_vs_full", r.accuracy_vs_full},
                         {"krr", optional_json(r.krr)}});
  j["per_seed"] = seeds;
  return j;
}

PredictionRecord prediction_record_from_json(const Json& j) {
  PredictionRecord r;
  r.pair_id = get_string(j, "pair_id");
  if (optional_field(j, "responses")) {
    r.responses = get_string_list(j, "responses");
    if (r.responses.empty())
      throw FormatError("pair " + r.pair_id + " has an empty response list");
    return r;
  }
  response::ParsedResponse p;
  if (const Json* label = optional_field(j, "label")) {
    if (!label->is_boolean())
      throw FormatError("field 'label' must be a boolean");
    p.classification = label->get<bool>();
  }
  if (optional_field(j, "guest_quotes"))
    p.guest_quotes = get_string_list(j, "guest_quotes");
  if (optional_field(j, "host_quotes"))
    p.host_quotes = get_string_list(j, "host_quotes");
  r.parsed = std::move(p);
  return r;
}

Json to_json(const ResolvedRecord& r) {
  Json j;
  j["pair_id"] = r.pair_id;
  if (const auto* p = std::get_if<response::Prediction>(&r.outcome)) {
    j["label"] = p->label;
    j["guest_words"] = word_set_json(p->guest_words);
    j["host_words"] = word_set_json(p->host_words);
    j["error"] = nullptr;
  } else {
    const auto& e = std::get<response::ExtractionError>(r.outcome);
    j["label"] = false;
    j["guest_words"] = Json::array();
    j["host_words"] = Json::array();
    j["error"] = response::error_kind_name(e.kind);
  }
  j["n_calls"] = r.n_calls;
  j["n_call_errors"] = r.n_call_errors;
  return j;
}

ResolvedRecord resolved_from_json(const Json& j) {
  ResolvedRecord r;
  r.pair_id = get_string(j, "pair_id");
  if (const Json* e = optional_field(j, "error")) {
    if (!e->is_string()) throw FormatError("field 'error' must be a string");
    r.outcome = response::ExtractionError{
        response::parse_error_kind(e->get<std::string>()), ""};
  } else {
    response::Prediction p;
    p.pair_id = r.pair_id;
    p.label = get_bool(j, "label");
    p.guest_words = get_word_set(j, "guest_words");
    p.host_words = get_word_set(j, "host_words");
    if (!p.label && (!p.guest_words.empty() || !p.host_words.empty()))
      throw FormatError("negative prediction " + r.pair_id +
                        " has highlighted words");
    r.outcome = std::move(p);
  }
  if (const Json* n = optional_field(j, "n_calls"))
    r.n_calls = get_count(*n, "n_calls");
  if (const Json* n = optional_field(j, "n_call_errors"))
    r.n_call_errors = get_count(*n, "n_call_errors");
  return r;
}

Json call_error_json(const std::string& pair_id,
                     std::optional<std::size_t> response_index,
                     const response::ExtractionError& e) {
  Json j;
  j["pair_id"] = pair_id;
  j["response_index"] = response_index ? Json(*response_index) : Json(nullptr);
  j["kind"] = response::error_kind_name(e.kind);
  j["detail"] = e.detail;
  return j;
}

evaluation::TokenProbPrediction token_probs_from_json(const Json& j) {
  evaluation::TokenProbPrediction tp;
  tp.pair_id = get_string(j, "pair_id");
  tp.guest_probs = get_real_list(j, "guest_probs");
  tp.host_probs = get_real_list(j, "host_probs");
  return tp;
}

Json to_json(const evaluation::EvalReport& r) {
  Json j;
  j["system"] = r.system;
  j["n_items"] = r.n_items;
  const auto& c = r.classification;
  j["precision"] = c.precision;
  j["recall"] = c.recall;
  j["f1"] = c.f1;
  j["confusion"] = Json{{"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"tn", c.tn}};
  j["jaccard_pairs"] = r.highlights.n_pairs;
  j["jaccard_guest"] = optional_json(r.highlights.guest);
  j["jaccard_host"] = optional_json(r.highlights.host);
  j["extraction_error_rate"] = optional_json(r.extraction_error_rate);
  j["classification_error_rate"] = optional_json(r.classification_error_rate);
  j["call_error_rate"] = optional_json(r.call_error_rate);
  Json kinds = Json::object();
  for (const auto& [k, n] : r.errors_by_kind) kinds[k] = n;
  j["errors_by_kind"] = kinds;
  return j;
}

Json word_set_json(const WordSet& s) {
  Json a = Json::array();
  for (std::size_t w : s) a.push_back(w);
  return a;
}

Json optional_json(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace paradial::io
