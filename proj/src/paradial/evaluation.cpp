// paradial/evaluation.cpp

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

#include "paradial/evaluation.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "paradial/errors.hpp"
#include "paradial/metrics.hpp"
#include "paradial/text.hpp"

namespace paradial::evaluation {
namespace {

using annotations::AggregatedPair;

const char* const kHeader[] = {"Model",      "Extract", "F1",
                               "Prec",       "Rec",     "Extract",
                               "Jacc Guest", "Jacc Host"};

// Outcome per gold pair, in gold order. Throws listing missing ids.
std::vector<const Extracted<Prediction>*> align(
    std::span<const ItemOutcome> outcomes, std::span<const AggregatedPair> gold) {
  std::unordered_map<std::string_view, const Extracted<Prediction>*> by_id;
  for (const ItemOutcome& o : outcomes) {
    if (!by_id.emplace(o.pair_id, &o.outcome).second)
      throw ValidationError("more than one prediction for pair " + o.pair_id);
  }
  std::vector<const Extracted<Prediction>*> aligned;
  std::string missing;
  std::size_t n_missing = 0;
  for (const AggregatedPair& g : gold) {
    auto it = by_id.find(g.pair_id);
    if (it == by_id.end()) {
      if (n_missing < 20) missing += (missing.empty() ? "" : ", ") + g.pair_id;
      ++n_missing;
      aligned.push_back(nullptr);
    } else {
      aligned.push_back(it->second);
    }
  }
  if (n_missing > 0)
    throw ValidationError(std::to_string(n_missing) +
                          " gold pairs without prediction: " + missing +
                          (n_missing > 20 ? ", ..." : ""));
  return aligned;
}

const Prediction* as_prediction(const Extracted<Prediction>* o) {
  return std::get_if<Prediction>(o);
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0
                  : static_cast<double>(num) / static_cast<double>(den);
}

std::string format_cell(const std::optional<double>& v, bool percent) {
  if (!v) return "-";
  char buf[32];
  if (percent)
    std::snprintf(buf, sizeof buf, "%.0f%%", std::round(*v * 100.0));
  else
    std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

std::optional<double> parse_cell(std::string_view cell, bool percent) {
  cell = text::trim(cell);
  if (cell == "-") return std::nullopt;
  if (percent) {
    if (cell.empty() || cell.back() != '%')
      throw FormatError("expected a percentage, got '" + std::string(cell) +
                        "'");
    cell.remove_suffix(1);
  }
  std::istringstream in{std::string(cell)};
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (!in || !in.eof())
    throw FormatError("bad table cell '" + std::string(cell) + "'");
  return percent ? v / 100.0 : v;
}

std::vector<std::string_view> split_row(std::string_view line) {
  line = text::trim(line);
  if (line.size() < 2 || line.front() != '|' || line.back() != '|')
    throw FormatError("table row must start and end with '|'");
  line = line.substr(1, line.size() - 2);
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = line.find('|', start);
    cells.push_back(text::trim(line.substr(start, bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return cells;
}

}  // namespace

ClassificationScores classification_metrics(
    std::span<const ItemOutcome> outcomes, std::span<const AggregatedPair> gold) {
  const auto aligned = align(outcomes, gold);
  ClassificationScores s;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const Prediction* p = as_prediction(aligned[i]);
    const bool pred = p != nullptr && p->label;
    if (pred && gold[i].is_paraphrase) ++s.tp;
    else if (pred) ++s.fp;
    else if (gold[i].is_paraphrase) ++s.fn;
    else ++s.tn;
  }
  s.precision = ratio(s.tp, s.tp + s.fp);
  s.recall = ratio(s.tp, s.tp + s.fn);
  s.f1 = s.precision + s.recall > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

HighlightScores highlight_jaccard(std::span<const ItemOutcome> outcomes,
                                  std::span<const AggregatedPair> gold,
                                  JaccardDenominator denominator) {
  const auto aligned = align(outcomes, gold);
  const WordSet empty;
  HighlightScores h;
  double sum_guest = 0.0;
  double sum_host = 0.0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!gold[i].is_paraphrase) continue;
    const Prediction* p = as_prediction(aligned[i]);
    const bool positive = p != nullptr && p->label;
    if (denominator == JaccardDenominator::kBothPositive && !positive)
      continue;
    sum_guest += metrics::jaccard(positive ? p->guest_words : empty,
                                  gold[i].guest_gold);
    sum_host += metrics::jaccard(positive ? p->host_words : empty,
                                 gold[i].host_gold);
    ++h.n_pairs;
  }
  if (h.n_pairs > 0) {
    h.guest = sum_guest / static_cast<double>(h.n_pairs);
    h.host = sum_host / static_cast<double>(h.n_pairs);
  }
  return h;
}

void check_thresholds(const Thresholds& t) {
  if (!(t.tau_cls > 0.0 && t.tau_cls <= 1.0))
    throw UsageError("tau_cls must be in (0, 1]");
  if (!(t.tau_hl > 0.0 && t.tau_hl <= 1.0))
    throw UsageError("tau_hl must be in (0, 1]");
}

Prediction threshold_token_probs(const TokenProbPrediction& tp,
                                 const Thresholds& thresholds,
                                 const corpus::UtterancePair* pair) {
  check_thresholds(thresholds);
  if (pair != nullptr) {
    const std::size_t g = text::word_count(pair->guest_text);
    const std::size_t h = text::word_count(pair->host_text);
    if (tp.guest_probs.size() != g || tp.host_probs.size() != h)
      throw ValidationError(
          "token probabilities for " + tp.pair_id + " have lengths " +
          std::to_string(tp.guest_probs.size()) + "/" +
          std::to_string(tp.host_probs.size()) + " but the pair has " +
          std::to_string(g) + "/" + std::to_string(h) + " words");
  }
  for (const auto* probs : {&tp.guest_probs, &tp.host_probs})
    for (double p : *probs)
      if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError("probability outside [0, 1] for " + tp.pair_id);

  auto any_at_least = [](const std::vector<double>& probs, double tau) {
    for (double p : probs)
      if (p >= tau) return true;
    return false;
  };
  Prediction pred;
  pred.pair_id = tp.pair_id;
  pred.label = any_at_least(tp.guest_probs, thresholds.tau_cls) &&
               any_at_least(tp.host_probs, thresholds.tau_cls);
  if (!pred.label) return pred;
  const double tau = std::min(thresholds.tau_hl, thresholds.tau_cls);
  for (std::size_t i = 0; i < tp.guest_probs.size(); ++i)
    if (tp.guest_probs[i] >= tau) pred.guest_words.insert(i);
  for (std::size_t i = 0; i < tp.host_probs.size(); ++i)
    if (tp.host_probs[i] >= tau) pred.host_words.insert(i);
  return pred;
}

double extraction_error_rate(std::span<const ItemOutcome> outcomes) {
  if (outcomes.empty())
    throw ValidationError("extraction error rate of an empty outcome list");
  std::size_t errors = 0;
  for (const ItemOutcome& o : outcomes) errors += is_error(o.outcome) ? 1 : 0;
  return ratio(errors, outcomes.size());
}

EvalReport evaluate(const EvalInput& input, std::span<const AggregatedPair> gold,
                    JaccardDenominator denominator) {
  EvalReport r;
  r.system = input.system;
  r.n_items = gold.size();
  r.classification = classification_metrics(input.outcomes, gold);
  r.highlights = highlight_jaccard(input.outcomes, gold, denominator);
  if (!input.generative) return r;

  // Only outcomes of gold pairs are counted.
  std::unordered_map<std::string_view, const ItemOutcome*> by_id;
  for (const ItemOutcome& o : input.outcomes) by_id.emplace(o.pair_id, &o);
  std::size_t errors = 0;
  std::size_t cls_errors = 0;
  for (const AggregatedPair& g : gold) {
    const auto* e = std::get_if<ExtractionError>(&by_id.at(g.pair_id)->outcome);
    if (e == nullptr) continue;
    ++errors;
    ++r.errors_by_kind[std::string(response::error_kind_name(e->kind))];
    if (e->kind == response::ExtractionErrorKind::kMissingClassification ||
        e->kind == response::ExtractionErrorKind::kUnparseable)
      ++cls_errors;
  }
  if (!gold.empty()) {
    r.extraction_error_rate = ratio(errors, gold.size());
    r.classification_error_rate = ratio(cls_errors, gold.size());
  }
  if (input.n_calls && input.n_call_errors && *input.n_calls > 0)
    r.call_error_rate = ratio(*input.n_call_errors, *input.n_calls);
  return r;
}

TableRow table_row(const EvalReport& report) {
  TableRow row;
  row.model = report.system;
  row.classification_extract = report.classification_error_rate;
  row.f1 = report.classification.f1;
  row.precision = report.classification.precision;
  row.recall = report.classification.recall;
  row.highlight_extract = report.extraction_error_rate;
  row.jaccard_guest = report.highlights.guest;
  row.jaccard_host = report.highlights.host;
  return row;
}

std::string format_table(std::span<const TableRow> rows) {
  std::string out = "|";
  for (const char* h : kHeader) out += std::string(" ") + h + " |";
  out += "\n|";
  for (std::size_t i = 0; i < std::size(kHeader); ++i)
    out += i == 0 ? "---|" : "---:|";
  out += "\n";
  for (const TableRow& r : rows) {
    if (r.model.find('|') != std::string::npos ||
        r.model.find('\n') != std::string::npos)
      throw UsageError("model name may not contain '|' or newlines");
    out += "| " + r.model;
    out += " | " + format_cell(r.classification_extract, true);
    out += " | " + format_cell(r.f1, false);
    out += " | " + format_cell(r.precision, false);
    out += " | " + format_cell(r.recall, false);
    out += " | " + format_cell(r.highlight_extract, true);
    out += " | " + format_cell(r.jaccard_guest, false);
    out += " | " + format_cell(r.jaccard_host, false);
    out += " |\n";
  }
  return out;
}

std::vector<TableRow> parse_table(std::string_view table) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < table.size()) {
    std::size_t nl = table.find('\n', start);
    if (nl == std::string_view::npos) nl = table.size();
    std::string_view line = text::trim(table.substr(start, nl - start));
    if (!line.empty()) lines.push_back(line);
    start = nl + 1;
  }
  if (lines.size() < 2) throw FormatError("table needs a header and a rule");
  const auto header = split_row(lines[0]);
  if (header.size() != std::size(kHeader))
    throw FormatError("table header has " + std::to_string(header.size()) +
                      " columns, expected 8");
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] != kHeader[i])
      throw FormatError("unexpected table column '" + std::string(header[i]) +
                        "'");
  std::vector<TableRow> rows;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    const auto c = split_row(lines[l]);
    if (c.size() != std::size(kHeader))
      throw FormatError("table row " + std::to_string(l + 1) + " has " +
                        std::to_string(c.size()) + " columns");
    TableRow r;
    r.model = std::string(c[0]);
    r.classification_extract = parse_cell(c[1], true);
    r.f1 = parse_cell(c[2], false);
    r.precision = parse_cell(c[3], false);
    r.recall = parse_cell(c[4], false);
    r.highlight_extract = parse_cell(c[5], true);
    r.jaccard_guest = parse_cell(c[6], false);
    r.jaccard_host = parse_cell(c[7], false);
    rows.push_back(std::move(r));
  }
  return rows;
}

TableRow rounded(const TableRow& row) {
  auto round_to = [](const std::optional<double>& v, double scale)
      -> std::optional<double> {
    if (!v) return std::nullopt;
    return *parse_cell(format_cell(v, scale == 100.0), scale == 100.0);
  };
  TableRow r = row;
  r.classification_extract = round_to(row.classification_extract, 100.0);
  r.f1 = round_to(row.f1, 1.0);
  r.precision = round_to(row.precision, 1.0);
  r.recall = round_to(row.recall, 1.0);
  r.highlight_extract = round_to(row.highlight_extract, 100.0);
  r.jaccard_guest = round_to(row.jaccard_guest, 1.0);
  r.jaccard_host = round_to(row.jaccard_host, 1.0);
  return r;
}

}  // namespace paradial::evaluation
