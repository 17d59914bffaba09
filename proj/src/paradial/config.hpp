// paradial/config.hpp

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

#ifndef PARADIAL_CONFIG_HPP_
#define PARADIAL_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paradial/allocation.hpp"
#include "paradial/annotations.hpp"
#include "paradial/corpus.hpp"
#include "paradial/evaluation.hpp"
#include "paradial/metrics.hpp"
#include "paradial/response_parser.hpp"
#include "paradial/serialization.hpp"

namespace paradial {

// File roles a run may reference.
inline constexpr std::string_view kPathRoles[] = {
    "transcripts", "pairs", "sampled", "train",       "dev",
    "test",        "annotations", "gold", "report",   "pool",
    "predictions", "resolved", "errors", "token_probs", "table",
};

bool is_path_role(std::string_view role);

struct RunConfig {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> paths;

  double entropy_t = 0.8;
  evaluation::Thresholds thresholds;
  response::MatchOptions match;

  // Colon syntax; empty means a single entropy:<entropy_t>:3:15 strategy.
  std::vector<std::string> strategies;
  allocation::AdmissibilityCaps caps;
  std::size_t n_seeds = 10;

  unsigned threads = 0;  // 0: hardware concurrency

  annotations::ValidationMode validation = annotations::ValidationMode::kStrict;
  annotations::HighlightBasis highlight_basis =
      annotations::HighlightBasis::kAllAnnotators;
  metrics::JaccardPooling jaccard_pooling =
      metrics::JaccardPooling::kPerPairFirst;
  evaluation::JaccardDenominator jaccard_denominator =
      evaluation::JaccardDenominator::kGoldPositive;

  std::size_t krr_k = 1;
  std::size_t krr_resamples = 1000;
  std::size_t krr_k_cap = 7;

  std::optional<std::size_t> n_interviews;  // unset: all interviews
  std::size_t max_consecutive = 5;
  corpus::SplitRatios split;

  std::optional<std::string> dataset;  // restrict agree/allocate-sim
  std::string system = "system";

  // Path for a role, or nullopt.
  std::optional<std::string> path(std::string_view role) const;
};

// Throws UsageError naming the offending setting.
void check_config(const RunConfig& config);

std::vector<allocation::Strategy> strategy_grid(const RunConfig& config);

// Applies the settings present in `j` on top of `config`. Unknown keys are a
// UsageError.
void apply_config_json(RunConfig& config, const io::Json& j);

RunConfig load_config_file(const std::string& path);

// Provenance record. Thread count is left out so outputs do not depend on it.
io::Json config_json(const RunConfig& config);

// Setting names for set_option, e.g. "tau_hl" or "krr_k".
void set_option(RunConfig& config, std::string_view name,
                std::string_view value);

}  // namespace paradial

#endif  // PARADIAL_CONFIG_HPP_
