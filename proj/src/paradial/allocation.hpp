// paradial/allocation.hpp

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

#ifndef PARADIAL_ALLOCATION_HPP_
#define PARADIAL_ALLOCATION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "paradial/metrics.hpp"

namespace paradial::allocation {

// Take the first n raters.
struct FixedStrategy {
  std::size_t n = 1;
};

// Add raters until some label has at least n votes, at most max raters.
struct AgreeStrategy {
  std::size_t n = 1;
  std::size_t max = 1;
};

// Take min raters, then add one at a time while the vote entropy (bits)
// exceeds threshold, at most max raters.
struct EntropyStrategy {
  double threshold = 0.8;
  std::size_t min = 3;
  std::size_t max = 15;
};

using Strategy = std::variant<FixedStrategy, AgreeStrategy, EntropyStrategy>;

// Parses "fixed:N", "agree:N:MAX" or "entropy:T:MIN:MAX". Throws UsageError on
// syntax errors or parameters outside their ranges.
Strategy parse_strategy(std::string_view spec);

std::string to_string(const Strategy& strategy);

// Throws UsageError when parameters are outside their ranges.
void check_strategy(const Strategy& strategy);

// Fewest raters an item must have for the strategy to be applicable.
std::size_t required_raters(const Strategy& strategy);

// Number of raters the strategy consumes from an ordered label sequence. For
// the dynamic strategies, max is capped at the number of available labels.
std::size_t consumed_count(const Strategy& strategy,
                           const std::vector<bool>& ordered_labels);

struct SimulationOptions {
  std::size_t krr_resamples = 1000;
  std::size_t krr_k_cap = 7;
  unsigned threads = 1;
};

struct SimulationResult {
  double avg_annotators = 0.0;
  double accuracy_vs_full = 0.0;
  std::optional<double> krr;
  std::vector<std::pair<std::string, std::size_t>> per_item_counts;
};

// Each item's raters are consumed in a random order derived from
// (seed, pair_id). Accuracy compares the simulated majority with the
// majority of the full pool (ties negative on both sides). kRR draws its
// subsets from each item's consumed raters with k = min(consumed / 2, cap).
SimulationResult simulate(const Strategy& strategy,
                          const metrics::LabelMatrix& pool, std::uint64_t seed,
                          const SimulationOptions& options = {});

struct AdmissibilityCaps {
  double cost = 8.0;
  double accuracy = 0.90;
  double krr = 0.70;
};

struct StrategyRow {
  Strategy strategy;
  double avg_annotators = 0.0;
  double accuracy_vs_full = 0.0;
  std::optional<double> krr;  // mean over seeds with a defined kRR
  bool admissible = false;
  std::vector<SimulationResult> per_seed;
};

std::vector<StrategyRow> evaluate_strategies(
    std::span<const Strategy> grid, const metrics::LabelMatrix& pool,
    std::span<const std::uint64_t> seeds, const AdmissibilityCaps& caps = {},
    const SimulationOptions& options = {});

}  // namespace paradial::allocation

#endif  // PARADIAL_ALLOCATION_HPP_
