// paradial/annotations.cpp

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

#include "paradial/annotations.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>

#include "paradial/errors.hpp"
#include "paradial/metrics.hpp"
#include "paradial/parallel.hpp"
#include "paradial/text.hpp"

namespace paradial::annotations {
namespace {

// Groups annotations by pair_id, dropping repeated (pair, annotator) records.
std::unordered_map<std::string, std::vector<Annotation>> group(
    std::span<const Annotation> annotations) {
  std::unordered_map<std::string, std::vector<Annotation>> grouped;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : annotations) {
    if (!seen.emplace(a.pair_id, a.annotator_id).second) continue;
    grouped[a.pair_id].push_back(a);
  }
  return grouped;
}

AggregatedPair aggregate_one(const std::string& pair_id,
                             std::span<const Annotation> anns,
                             HighlightBasis basis) {
  std::vector<bool> votes;
  votes.reserve(anns.size());
  for (const auto& a : anns) votes.push_back(a.is_paraphrase);
  const MajorityLabel label = majority_label(votes);

  AggregatedPair out;
  out.pair_id = pair_id;
  out.n_annotations = label.n;
  out.positive_votes = label.positive_votes;
  out.is_paraphrase = label.is_paraphrase;
  out.vote_entropy = metrics::entropy_binary(label.positive_votes, label.n);
  if (out.is_paraphrase) {
    out.guest_gold = majority_highlight(anns, Side::kGuest, basis);
    out.host_gold = majority_highlight(anns, Side::kHost, basis);
  }
  for (const auto& a : anns) {
    if (a.dataset) {
      out.dataset = a.dataset;
      break;
    }
  }
  return out;
}

std::vector<AggregatedPair> aggregate_grouped(
    const std::vector<std::string>& order,
    const std::unordered_map<std::string, std::vector<Annotation>>& grouped,
    const AggregateOptions& options) {
  std::vector<AggregatedPair> out(order.size());
  parallel_for(order.size(), options.threads, [&](std::size_t i) {
    out[i] = aggregate_one(order[i], grouped.at(order[i]), options.basis);
  });
  return out;
}

}  // namespace

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kIndexOutOfRange:
      return "index_out_of_range";
    case ViolationKind::kParaphraseWithoutHighlight:
      return "paraphrase_without_highlight";
    case ViolationKind::kHighlightWithoutParaphrase:
      return "highlight_without_paraphrase";
    case ViolationKind::kDuplicateRecord:
      break;
  }
  return "duplicate_record";
}

namespace {

using WordCounts =
    std::unordered_map<std::string, std::pair<std::size_t, std::size_t>>;

ValidationReport validate_impl(std::span<const Annotation> annotations,
                               const WordCounts* words, ValidationMode mode) {
  ValidationReport report;
  report.mode = mode;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : annotations) {
    WordCounts::const_iterator it;
    if (words != nullptr) {
      it = words->find(a.pair_id);
      if (it == words->end())
        throw ValidationError("annotation by " + a.annotator_id +
                              " references unknown pair_id " + a.pair_id);
    }
    auto add = [&](ViolationKind kind, std::string detail) {
      report.violations.push_back(
          Violation{kind, a.pair_id, a.annotator_id, std::move(detail)});
    };
    if (!seen.emplace(a.pair_id, a.annotator_id).second)
      add(ViolationKind::kDuplicateRecord,
          "second record for this (pair, annotator)");
    for (Side side : {Side::kGuest, Side::kHost}) {
      if (words == nullptr) break;
      const std::size_t n =
          side == Side::kGuest ? it->second.first : it->second.second;
      const WordSet& h = a.highlight(side);
      if (!h.empty() && *h.rbegin() >= n)
        add(ViolationKind::kIndexOutOfRange,
            std::string(side_name(side)) + " index " +
                std::to_string(*h.rbegin()) + " >= word count " +
                std::to_string(n));
    }
    const bool both = !a.guest_highlight.empty() && !a.host_highlight.empty();
    const bool any = !a.guest_highlight.empty() || !a.host_highlight.empty();
    if (a.is_paraphrase && !both)
      add(ViolationKind::kParaphraseWithoutHighlight,
          "paraphrase vote without highlights on both sides");
    if (!a.is_paraphrase && any)
      add(ViolationKind::kHighlightWithoutParaphrase,
          "non-paraphrase vote with highlights");
  }
  return report;
}

}  // namespace

ValidationReport validate(std::span<const Annotation> annotations,
                          std::span<const corpus::UtterancePair> pairs,
                          ValidationMode mode) {
  WordCounts words;
  for (const auto& p : pairs)
    words[p.pair_id] = {text::word_count(p.guest_text),
                        text::word_count(p.host_text)};
  return validate_impl(annotations, &words, mode);
}

ValidationReport validate(std::span<const Annotation> annotations,
                          ValidationMode mode) {
  return validate_impl(annotations, nullptr, mode);
}

MajorityLabel majority_label(const std::vector<bool>& votes) {
  if (votes.empty()) throw ValidationError("majority_label: no votes");
  MajorityLabel m;
  m.n = votes.size();
  m.positive_votes =
      static_cast<std::size_t>(std::count(votes.begin(), votes.end(), true));
  m.is_paraphrase = 2 * m.positive_votes > m.n;
  return m;
}

WordSet majority_highlight(std::span<const Annotation> pair_annotations,
                           Side side, HighlightBasis basis) {
  std::map<std::size_t, std::size_t> counts;
  std::size_t denominator = 0;
  for (const auto& a : pair_annotations) {
    if (basis == HighlightBasis::kParaphraseVoters && !a.is_paraphrase)
      continue;
    ++denominator;
    for (std::size_t w : a.highlight(side)) ++counts[w];
  }
  WordSet out;
  for (const auto& [word, count] : counts) {
    if (2 * count > denominator) out.insert(word);
  }
  return out;
}

std::vector<AggregatedPair> aggregate(
    std::span<const corpus::UtterancePair> pairs,
    std::span<const Annotation> annotations,
    const AggregateOptions& options) {
  const auto grouped = group(annotations);
  std::set<std::string> known;
  for (const auto& p : pairs) known.insert(p.pair_id);
  for (const auto& [id, anns] : grouped) {
    if (!known.count(id))
      throw ValidationError("annotations reference unknown pair_id " + id);
  }
  std::vector<std::string> order;
  std::set<std::string> emitted;
  for (const auto& p : pairs) {
    if (grouped.count(p.pair_id) && emitted.insert(p.pair_id).second)
      order.push_back(p.pair_id);
  }
  return aggregate_grouped(order, grouped, options);
}

std::vector<AggregatedPair> aggregate(std::span<const Annotation> annotations,
                                      const AggregateOptions& options) {
  const auto grouped = group(annotations);
  std::vector<std::string> order;
  for (const auto& [id, anns] : grouped) order.push_back(id);
  std::sort(order.begin(), order.end());
  return aggregate_grouped(order, grouped, options);
}

std::vector<DatasetStatistics> dataset_statistics(
    std::span<const AggregatedPair> aggregated) {
  std::map<std::string, DatasetStatistics> by_name;
  DatasetStatistics total;
  total.dataset = "TOTAL";
  for (const auto& a : aggregated) {
    const std::string name = a.dataset.value_or("UNLABELED");
    for (DatasetStatistics* s : {&by_name[name], &total}) {
      ++s->n_pairs;
      s->n_paraphrases += a.is_paraphrase ? 1 : 0;
      s->n_annotations += a.n_annotations;
    }
    by_name[name].dataset = name;
  }
  std::vector<DatasetStatistics> rows;
  for (auto& [name, s] : by_name) rows.push_back(s);
  rows.push_back(total);
  for (auto& s : rows) {
    s.mean_annotations = s.n_pairs == 0
                             ? 0.0
                             : static_cast<double>(s.n_annotations) /
                                   static_cast<double>(s.n_pairs);
  }
  return rows;
}

std::vector<AnnotatedPair> group_by_pair(
    std::span<const corpus::UtterancePair> pairs,
    std::span<const Annotation> annotations) {
  auto grouped = group(annotations);
  std::vector<AnnotatedPair> out;
  std::set<std::string> emitted;
  for (const auto& p : pairs) {
    auto it = grouped.find(p.pair_id);
    if (it == grouped.end() || !emitted.insert(p.pair_id).second) continue;
    AnnotatedPair ap;
    ap.pair_id = p.pair_id;
    ap.guest_words = text::word_count(p.guest_text);
    ap.host_words = text::word_count(p.host_text);
    ap.annotations = std::move(it->second);
    out.push_back(std::move(ap));
  }
  return out;
}

std::vector<AnnotatedPair> group_by_pair(
    std::span<const Annotation> annotations) {
  std::vector<AnnotatedPair> out;
  std::unordered_map<std::string, std::size_t> index;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& a : annotations) {
    if (!seen.emplace(a.pair_id, a.annotator_id).second) continue;
    auto [it, fresh] = index.emplace(a.pair_id, out.size());
    if (fresh) out.push_back(AnnotatedPair{a.pair_id, 0, 0, {}});
    out[it->second].annotations.push_back(a);
  }
  return out;
}

}  // namespace paradial::annotations
