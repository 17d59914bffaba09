// paradial/metrics.cpp

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

#include "paradial/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "paradial/errors.hpp"
#include "paradial/parallel.hpp"
#include "paradial/rng.hpp"

namespace paradial::metrics {

using annotations::AnnotatedPair;
using annotations::Annotation;

LabelMatrix::LabelMatrix(std::vector<std::string> items,
                         std::vector<std::string> raters)
    : items_(std::move(items)),
      raters_(std::move(raters)),
      cells_(items_.size() * raters_.size(), -1) {}

LabelMatrix LabelMatrix::from_annotations(
    std::span<const Annotation> annotations) {
  std::vector<std::string> items;
  std::unordered_map<std::string, std::size_t> item_index;
  std::vector<std::string> raters;
  for (const auto& a : annotations) {
    if (item_index.emplace(a.pair_id, items.size()).second)
      items.push_back(a.pair_id);
    raters.push_back(a.annotator_id);
  }
  std::sort(raters.begin(), raters.end());
  raters.erase(std::unique(raters.begin(), raters.end()), raters.end());

  LabelMatrix m(std::move(items), raters);
  for (const auto& a : annotations) {
    const std::size_t r = static_cast<std::size_t>(
        std::lower_bound(raters.begin(), raters.end(), a.annotator_id) -
        raters.begin());
    const std::size_t i = item_index.at(a.pair_id);
    if (!m.cell(i, r)) m.set(i, r, a.is_paraphrase);  // first record wins
  }
  return m;
}

void LabelMatrix::set(std::size_t item, std::size_t rater, bool label) {
  cells_.at(item * raters_.size() + rater) = label ? 1 : 0;
}

std::optional<bool> LabelMatrix::cell(std::size_t item,
                                      std::size_t rater) const {
  const std::int8_t v = cells_.at(item * raters_.size() + rater);
  if (v < 0) return std::nullopt;
  return v == 1;
}

std::vector<bool> LabelMatrix::item_labels(std::size_t item) const {
  std::vector<bool> out;
  for (std::size_t r = 0; r < raters_.size(); ++r) {
    const std::int8_t v = cells_[item * raters_.size() + r];
    if (v >= 0) out.push_back(v == 1);
  }
  return out;
}

double jaccard(const WordSet& a, const WordSet& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (std::size_t w : a) inter += b.count(w);
  const std::size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

std::optional<double> alpha_nominal_counts(
    std::span<const std::vector<std::size_t>> unit_counts) {
  std::size_t categories = 0;
  for (const auto& u : unit_counts) categories = std::max(categories, u.size());
  // Coincidence matrix o[c][k]; each pairable unit contributes
  // n_uc * (n_uk - [c == k]) / (m_u - 1).
  std::vector<double> o(categories * categories, 0.0);
  for (const auto& u : unit_counts) {
    const std::size_t m = std::accumulate(u.begin(), u.end(), std::size_t{0});
    if (m < 2) continue;
    const double w = 1.0 / static_cast<double>(m - 1);
    for (std::size_t c = 0; c < u.size(); ++c) {
      if (u[c] == 0) continue;
      for (std::size_t k = 0; k < u.size(); ++k) {
        const std::size_t same = c == k ? 1 : 0;
        if (u[k] < same) continue;
        o[c * categories + k] +=
            static_cast<double>(u[c]) * static_cast<double>(u[k] - same) * w;
      }
    }
  }
  std::vector<double> marginal(categories, 0.0);
  double n = 0.0;
  for (std::size_t c = 0; c < categories; ++c) {
    for (std::size_t k = 0; k < categories; ++k)
      marginal[c] += o[c * categories + k];
    n += marginal[c];
  }
  double observed = 0.0;
  double expected = 0.0;
  for (std::size_t c = 0; c < categories; ++c) {
    for (std::size_t k = 0; k < categories; ++k) {
      if (c == k) continue;
      observed += o[c * categories + k];
      expected += marginal[c] * marginal[k];
    }
  }
  if (n < 2.0 || expected <= 0.0) return std::nullopt;
  return 1.0 - (n - 1.0) * observed / expected;
}

std::optional<double> alpha_nominal(const LabelMatrix& m) {
  std::vector<std::vector<std::size_t>> units;
  std::size_t pairable = 0;
  for (std::size_t i = 0; i < m.n_items(); ++i) {
    const std::vector<bool> labels = m.item_labels(i);
    const std::size_t pos =
        static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
    units.push_back({labels.size() - pos, pos});
    if (labels.size() >= 2) ++pairable;
  }
  if (pairable < 2)
    throw ValidationError(
        "alpha_nominal needs at least two items with two or more labels");
  return alpha_nominal_counts(units);
}

std::optional<double> loo_majority_accuracy(const LabelMatrix& m) {
  double matches = 0.0;
  std::size_t cells = 0;
  for (std::size_t i = 0; i < m.n_items(); ++i) {
    const std::vector<bool> labels = m.item_labels(i);
    const std::size_t total = labels.size();
    if (total < 2) continue;
    const std::size_t pos =
        static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
    for (bool label : labels) {
      const std::size_t others_pos = pos - (label ? 1 : 0);
      const std::size_t others_neg = (total - 1) - others_pos;
      if (others_pos == others_neg) {
        matches += 0.5;
      } else if ((others_pos > others_neg) == label) {
        matches += 1.0;
      }
      ++cells;
    }
  }
  if (cells == 0) return std::nullopt;
  return matches / static_cast<double>(cells);
}

std::vector<const AnnotatedPair*> qualifying_pairs(
    std::span<const AnnotatedPair> pairs) {
  std::vector<const AnnotatedPair*> out;
  for (const auto& p : pairs) {
    const auto positives = std::count_if(
        p.annotations.begin(), p.annotations.end(),
        [](const Annotation& a) { return a.is_paraphrase; });
    if (positives >= 2) out.push_back(&p);
  }
  return out;
}

std::optional<double> unitizing_alpha_words(std::span<const AnnotatedPair> pairs,
                                            Side side) {
  const auto qualifying = qualifying_pairs(pairs);
  if (qualifying.empty()) return std::nullopt;
  std::vector<std::vector<std::size_t>> units;
  for (const AnnotatedPair* p : qualifying) {
    const std::size_t m = p->annotations.size();
    std::vector<std::size_t> highlighted(p->words(side), 0);
    for (const auto& a : p->annotations) {
      for (std::size_t w : a.highlight(side)) {
        if (w < highlighted.size()) ++highlighted[w];
      }
    }
    for (std::size_t h : highlighted) units.push_back({m - h, h});
  }
  return alpha_nominal_counts(units);
}

std::optional<double> mean_pairwise_jaccard(std::span<const AnnotatedPair> pairs,
                                            Side side, JaccardPooling pooling) {
  double pooled_sum = 0.0;
  std::size_t pooled_n = 0;
  double per_pair_sum = 0.0;
  std::size_t per_pair_n = 0;
  for (const AnnotatedPair* p : qualifying_pairs(pairs)) {
    std::vector<const WordSet*> sets;
    for (const auto& a : p->annotations) {
      if (!a.highlight(side).empty()) sets.push_back(&a.highlight(side));
    }
    if (sets.size() < 2) continue;
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        sum += jaccard(*sets[i], *sets[j]);
        ++n;
      }
    }
    pooled_sum += sum;
    pooled_n += n;
    per_pair_sum += sum / static_cast<double>(n);
    ++per_pair_n;
  }
  if (per_pair_n == 0) return std::nullopt;
  if (pooling == JaccardPooling::kGlobal)
    return pooled_sum / static_cast<double>(pooled_n);
  return per_pair_sum / static_cast<double>(per_pair_n);
}

double entropy_binary(std::size_t positive, std::size_t total) {
  if (total == 0) throw ValidationError("entropy_binary: total must be >= 1");
  if (positive > total)
    throw ValidationError("entropy_binary: positive exceeds total");
  const double p = static_cast<double>(positive) / static_cast<double>(total);
  auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

std::optional<double> k_rater_reliability(std::span<const KrrItem> items,
                                          std::size_t resamples,
                                          std::uint64_t seed,
                                          unsigned threads) {
  if (resamples == 0) throw UsageError("kRR needs at least one resample");
  std::vector<std::size_t> agreements(items.size(), 0);
  std::vector<char> usable(items.size(), 0);
  parallel_for(items.size(), threads, [&](std::size_t i) {
    const KrrItem& item = items[i];
    const std::size_t k = item.k;
    const std::size_t n = item.labels.size();
    if (k == 0 || 2 * k > n) return;
    usable[i] = 1;
    RandomStream stream = derive_stream(seed, "krr:" + item.key);
    std::vector<std::size_t> idx(n);
    for (std::size_t r = 0; r < resamples; ++r) {
      std::iota(idx.begin(), idx.end(), std::size_t{0});
      // Partial Fisher-Yates: idx[0, 2k) becomes a uniform ordered sample.
      for (std::size_t s = 0; s < 2 * k; ++s) {
        const std::size_t j = s + stream.below(n - s);
        std::swap(idx[s], idx[j]);
      }
      std::size_t first = 0;
      std::size_t second = 0;
      for (std::size_t s = 0; s < k; ++s) {
        first += item.labels[idx[s]] ? 1 : 0;
        second += item.labels[idx[k + s]] ? 1 : 0;
      }
      if ((2 * first > k) == (2 * second > k)) ++agreements[i];
    }
  });
  std::size_t total = 0;
  std::size_t n_usable = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!usable[i]) continue;
    total += agreements[i];
    ++n_usable;
  }
  if (n_usable == 0) return std::nullopt;
  return static_cast<double>(total) /
         (static_cast<double>(n_usable) * static_cast<double>(resamples));
}

std::optional<double> k_rater_reliability(const LabelMatrix& m, std::size_t k,
                                          std::size_t resamples,
                                          std::uint64_t seed,
                                          unsigned threads) {
  if (k == 0) throw UsageError("kRR needs k >= 1");
  std::vector<KrrItem> items;
  items.reserve(m.n_items());
  for (std::size_t i = 0; i < m.n_items(); ++i)
    items.push_back(KrrItem{m.items()[i], m.item_labels(i), k});
  return k_rater_reliability(items, resamples, seed, threads);
}

AgreementReport agreement_report(std::string dataset,
                                 std::span<const AnnotatedPair> pairs,
                                 const AgreementOptions& options) {
  AgreementReport report;
  report.dataset = std::move(dataset);
  report.n_items = pairs.size();
  std::vector<Annotation> flat;
  for (const auto& p : pairs) {
    report.n_annotations += p.annotations.size();
    flat.insert(flat.end(), p.annotations.begin(), p.annotations.end());
  }
  report.n_qualifying_pairs = qualifying_pairs(pairs).size();
  const LabelMatrix m = LabelMatrix::from_annotations(flat);
  try {
    report.alpha_nominal = alpha_nominal(m);
  } catch (const ValidationError&) {
    report.alpha_nominal.reset();
  }
  report.loo_accuracy = loo_majority_accuracy(m);
  report.unitizing_alpha_guest = unitizing_alpha_words(pairs, Side::kGuest);
  report.unitizing_alpha_host = unitizing_alpha_words(pairs, Side::kHost);
  report.mean_jaccard_guest =
      mean_pairwise_jaccard(pairs, Side::kGuest, options.jaccard_pooling);
  report.mean_jaccard_host =
      mean_pairwise_jaccard(pairs, Side::kHost, options.jaccard_pooling);
  report.krr = k_rater_reliability(m, options.krr_k, options.krr_resamples,
                                   options.seed, options.threads);
  return report;
}

}  // namespace paradial::metrics
