// paradial/allocation.cpp

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

#include "paradial/allocation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "paradial/errors.hpp"
#include "paradial/parallel.hpp"
#include "paradial/rng.hpp"

namespace paradial::allocation {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = s.find(':', start);
    parts.push_back(s.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view field, std::string_view spec) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw UsageError("bad count '" + std::string(field) + "' in strategy '" +
                     std::string(spec) + "'");
  return value;
}

double parse_real(std::string_view field, std::string_view spec) {
  std::istringstream in{std::string(field)};
  in.imbue(std::locale::classic());
  double value = 0.0;
  in >> value;
  if (!in || !in.eof() || !std::isfinite(value))
    throw UsageError("bad threshold '" + std::string(field) +
                     "' in strategy '" + std::string(spec) + "'");
  return value;
}

bool majority(const std::vector<bool>& labels, std::size_t count) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i < count; ++i) pos += labels[i] ? 1 : 0;
  return 2 * pos > count;
}

}  // namespace

Strategy parse_strategy(std::string_view spec) {
  const auto parts = split_colon(spec);
  Strategy strategy;
  if (parts[0] == "fixed" && parts.size() == 2) {
    strategy = FixedStrategy{parse_count(parts[1], spec)};
  } else if (parts[0] == "agree" && parts.size() == 3) {
    strategy =
        AgreeStrategy{parse_count(parts[1], spec), parse_count(parts[2], spec)};
  } else if (parts[0] == "entropy" && parts.size() == 4) {
    strategy = EntropyStrategy{parse_real(parts[1], spec),
                               parse_count(parts[2], spec),
                               parse_count(parts[3], spec)};
  } else {
    throw UsageError("unknown strategy '" + std::string(spec) +
                     "' (expected fixed:N, agree:N:MAX or entropy:T:MIN:MAX)");
  }
  check_strategy(strategy);
  return strategy;
}

std::string to_string(const Strategy& strategy) {
  return std::visit(
      Overloaded{
          [](const FixedStrategy& s) { return "fixed:" + std::to_string(s.n); },
          [](const AgreeStrategy& s) {
            return "agree:" + std::to_string(s.n) + ":" + std::to_string(s.max);
          },
          [](const EntropyStrategy& s) {
            std::ostringstream out;
            out.imbue(std::locale::classic());
            out << "entropy:" << s.threshold << ':' << s.min << ':' << s.max;
            return out.str();
          }},
      strategy);
}

void check_strategy(const Strategy& strategy) {
  std::visit(Overloaded{
                 [](const FixedStrategy& s) {
                   if (s.n < 1) throw UsageError("fixed: n must be >= 1");
                 },
                 [](const AgreeStrategy& s) {
                   if (s.n < 1 || s.n > s.max)
                     throw UsageError("agree: need 1 <= n <= max");
                 },
                 [](const EntropyStrategy& s) {
                   if (s.min < 1 || s.min > s.max)
                     throw UsageError("entropy: need 1 <= min <= max");
                   if (!(s.threshold >= 0.0))
                     throw UsageError("entropy: threshold must be >= 0");
                 }},
             strategy);
}

std::size_t required_raters(const Strategy& strategy) {
  return std::visit(
      Overloaded{[](const FixedStrategy& s) { return s.n; },
                 [](const AgreeStrategy& s) { return s.n; },
                 [](const EntropyStrategy& s) { return s.min; }},
      strategy);
}

std::size_t consumed_count(const Strategy& strategy,
                           const std::vector<bool>& labels) {
  const std::size_t available = labels.size();
  return std::visit(
      Overloaded{
          [&](const FixedStrategy& s) { return std::min(s.n, available); },
          [&](const AgreeStrategy& s) {
            const std::size_t cap = std::min(s.max, available);
            std::size_t pos = 0;
            std::size_t taken = 0;
            while (taken < cap) {
              pos += labels[taken] ? 1 : 0;
              ++taken;
              if (pos >= s.n || taken - pos >= s.n) break;
            }
            return taken;
          },
          [&](const EntropyStrategy& s) {
            const std::size_t cap = std::min(s.max, available);
            std::size_t taken = std::min(s.min, cap);
            std::size_t pos = 0;
            for (std::size_t i = 0; i < taken; ++i) pos += labels[i] ? 1 : 0;
            while (taken < cap &&
                   metrics::entropy_binary(pos, taken) > s.threshold) {
              pos += labels[taken] ? 1 : 0;
              ++taken;
            }
            return taken;
          }},
      strategy);
}

SimulationResult simulate(const Strategy& strategy,
                          const metrics::LabelMatrix& pool, std::uint64_t seed,
                          const SimulationOptions& options) {
  check_strategy(strategy);
  const std::size_t n = pool.n_items();
  if (n == 0) throw ValidationError("allocation pool has no items");
  const std::size_t needed = required_raters(strategy);

  std::vector<std::vector<bool>> ordered(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> labels = pool.item_labels(i);
    if (labels.size() < needed)
      throw ValidationError("item " + pool.items()[i] + " has " +
                            std::to_string(labels.size()) +
                            " raters but strategy " + to_string(strategy) +
                            " needs " + std::to_string(needed));
    std::vector<std::size_t> order(labels.size());
    for (std::size_t r = 0; r < order.size(); ++r) order[r] = r;
    RandomStream stream = derive_stream(seed, "alloc:" + pool.items()[i]);
    stream.shuffle(order);
    ordered[i].reserve(labels.size());
    for (std::size_t r : order) ordered[i].push_back(labels[r]);
  }

  std::vector<std::size_t> counts(n);
  std::vector<char> matches(n);
  parallel_for(n, options.threads, [&](std::size_t i) {
    counts[i] = consumed_count(strategy, ordered[i]);
    matches[i] = majority(ordered[i], counts[i]) ==
                 majority(ordered[i], ordered[i].size());
  });

  SimulationResult result;
  std::size_t total = 0;
  std::size_t agree = 0;
  std::vector<metrics::KrrItem> krr_items;
  krr_items.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    total += counts[i];
    agree += matches[i] ? 1 : 0;
    result.per_item_counts.emplace_back(pool.items()[i], counts[i]);
    krr_items.push_back(metrics::KrrItem{
        pool.items()[i],
        std::vector<bool>(ordered[i].begin(),
                          ordered[i].begin() +
                              static_cast<std::ptrdiff_t>(counts[i])),
        std::min(counts[i] / 2, options.krr_k_cap)});
  }
  result.avg_annotators =
      static_cast<double>(total) / static_cast<double>(n);
  result.accuracy_vs_full = static_cast<double>(agree) / static_cast<double>(n);
  result.krr = metrics::k_rater_reliability(krr_items, options.krr_resamples,
                                            seed, options.threads);
  return result;
}

std::vector<StrategyRow> evaluate_strategies(
    std::span<const Strategy> grid, const metrics::LabelMatrix& pool,
    std::span<const std::uint64_t> seeds, const AdmissibilityCaps& caps,
    const SimulationOptions& options) {
  if (grid.empty()) throw UsageError("strategy grid is empty");
  if (seeds.empty()) throw UsageError("need at least one seed");
  std::vector<StrategyRow> rows;
  for (const Strategy& strategy : grid) {
    StrategyRow row;
    row.strategy = strategy;
    double krr_sum = 0.0;
    std::size_t krr_n = 0;
    for (std::uint64_t seed : seeds) {
      SimulationResult r = simulate(strategy, pool, seed, options);
      row.avg_annotators += r.avg_annotators;
      row.accuracy_vs_full += r.accuracy_vs_full;
      if (r.krr) {
        krr_sum += *r.krr;
        ++krr_n;
      }
      row.per_seed.push_back(std::move(r));
    }
    const double s = static_cast<double>(seeds.size());
    row.avg_annotators /= s;
    row.accuracy_vs_full /= s;
    if (krr_n > 0) row.krr = krr_sum / static_cast<double>(krr_n);
    row.admissible = row.avg_annotators <= caps.cost &&
                     row.accuracy_vs_full >= caps.accuracy && row.krr &&
                     *row.krr >= caps.krr;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace paradial::allocation
