// paradial/config.cpp

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

#include "paradial/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "paradial/errors.hpp"

namespace paradial {
namespace {

using io::Json;

template <class E>
struct EnumName {
  E value;
  const char* name;
};

constexpr EnumName<annotations::ValidationMode> kValidationNames[] = {
    {annotations::ValidationMode::kStrict, "strict"},
    {annotations::ValidationMode::kLenient, "lenient"}};
constexpr EnumName<annotations::HighlightBasis> kBasisNames[] = {
    {annotations::HighlightBasis::kAllAnnotators, "all_annotators"},
    {annotations::HighlightBasis::kParaphraseVoters, "paraphrase_voters"}};
constexpr EnumName<metrics::JaccardPooling> kPoolingNames[] = {
    {metrics::JaccardPooling::kPerPairFirst, "per_pair"},
    {metrics::JaccardPooling::kGlobal, "global"}};
constexpr EnumName<evaluation::JaccardDenominator> kDenominatorNames[] = {
    {evaluation::JaccardDenominator::kGoldPositive, "gold_positive"},
    {evaluation::JaccardDenominator::kBothPositive, "both_positive"}};

template <class E, std::size_t N>
E enum_from(const EnumName<E> (&names)[N], std::string_view s,
            std::string_view setting) {
  std::string allowed;
  for (const auto& n : names) {
    if (s == n.name) return n.value;
    allowed += (allowed.empty() ? "" : ", ") + std::string(n.name);
  }
  throw UsageError("bad value '" + std::string(s) + "' for " +
                   std::string(setting) + " (expected " + allowed + ")");
}

template <class E, std::size_t N>
const char* enum_name(const EnumName<E> (&names)[N], E value) {
  for (const auto& n : names)
    if (n.value == value) return n.name;
  return names[0].name;
}

std::uint64_t parse_u64(std::string_view s, std::string_view setting) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("bad integer '" + std::string(s) + "' for " +
                     std::string(setting));
  return v;
}

double parse_double(std::string_view s, std::string_view setting) {
  std::istringstream in{std::string(s)};
  in.imbue(std::locale::classic());
  double v = 0.0;
  in >> v;
  if (s.empty() || !in || !in.eof() || !std::isfinite(v))
    throw UsageError("bad number '" + std::string(s) + "' for " +
                     std::string(setting));
  return v;
}

double json_real(const Json& v, std::string_view key) {
  if (!v.is_number())
    throw UsageError("config: " + std::string(key) + " must be a number");
  return v.get<double>();
}

std::uint64_t json_count(const Json& v, std::string_view key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0)
    return static_cast<std::uint64_t>(v.get<long long>());
  throw UsageError("config: " + std::string(key) +
                   " must be a non-negative integer");
}

std::string json_string(const Json& v, std::string_view key) {
  if (!v.is_string())
    throw UsageError("config: " + std::string(key) + " must be a string");
  return v.get<std::string>();
}

void require_object(const Json& v, std::string_view key) {
  if (!v.is_object())
    throw UsageError("config: " + std::string(key) + " must be an object");
}

[[noreturn]] void unknown_key(std::string_view section, std::string_view key) {
  throw UsageError("config: unknown setting '" +
                   (section.empty() ? std::string(key)
                                    : std::string(section) + "." +
                                          std::string(key)) +
                   "'");
}

}  // namespace

bool is_path_role(std::string_view role) {
  return std::find(std::begin(kPathRoles), std::end(kPathRoles), role) !=
         std::end(kPathRoles);
}

std::optional<std::string> RunConfig::path(std::string_view role) const {
  auto it = paths.find(std::string(role));
  if (it == paths.end() || it->second.empty()) return std::nullopt;
  return it->second;
}

void check_config(const RunConfig& c) {
  for (const auto& [role, p] : c.paths)
    if (!is_path_role(role))
      throw UsageError("unknown path role '" + role + "'");
  if (!(c.entropy_t >= 0.0)) throw UsageError("entropy_t must be >= 0");
  evaluation::check_thresholds(c.thresholds);
  response::check_match_options(c.match);
  for (const std::string& s : c.strategies) allocation::parse_strategy(s);
  if (!(c.caps.cost >= 0.0)) throw UsageError("caps.cost must be >= 0");
  if (!(c.caps.accuracy >= 0.0 && c.caps.accuracy <= 1.0))
    throw UsageError("caps.accuracy must be in [0, 1]");
  if (!(c.caps.krr >= -1.0 && c.caps.krr <= 1.0))
    throw UsageError("caps.krr must be in [-1, 1]");
  if (c.n_seeds < 1) throw UsageError("n_seeds must be >= 1");
  if (c.krr_k < 1) throw UsageError("krr.k must be >= 1");
  if (c.krr_resamples < 1) throw UsageError("krr.resamples must be >= 1");
  if (c.krr_k_cap < 1) throw UsageError("krr.k_cap must be >= 1");
  if (c.max_consecutive < 1) throw UsageError("max_consecutive must be >= 1");
  const double sum = c.split.train + c.split.dev + c.split.test;
  for (double r : {c.split.train, c.split.dev, c.split.test})
    if (!(r >= 0.0 && r <= 1.0))
      throw UsageError("split ratios must be in [0, 1]");
  if (std::fabs(sum - 1.0) > 1e-9)
    throw UsageError("split ratios must sum to 1");
}

std::vector<allocation::Strategy> strategy_grid(const RunConfig& c) {
  std::vector<allocation::Strategy> grid;
  if (c.strategies.empty()) {
    grid.push_back(allocation::EntropyStrategy{c.entropy_t, 3, 15});
    return grid;
  }
  for (const std::string& s : c.strategies)
    grid.push_back(allocation::parse_strategy(s));
  return grid;
}

void apply_config_json(RunConfig& c, const Json& j) {
  require_object(j, "top level");
  for (const auto& [key, v] : j.items()) {
    if (key == "seed") {
      c.seed = json_count(v, key);
    } else if (key == "paths") {
      require_object(v, key);
      for (const auto& [role, p] : v.items()) {
        if (!is_path_role(role))
          throw UsageError("config: unknown path role '" + role + "'");
        c.paths[role] = json_string(p, role);
      }
    } else if (key == "thresholds") {
      require_object(v, key);
      for (const auto& [k, t] : v.items()) {
        if (k == "entropy_t") c.entropy_t = json_real(t, k);
        else if (k == "tau_cls") c.thresholds.tau_cls = json_real(t, k);
        else if (k == "tau_hl") c.thresholds.tau_hl = json_real(t, k);
        else if (k == "max_gap") c.match.max_gap = json_count(t, k);
        else if (k == "min_coverage") c.match.min_coverage = json_real(t, k);
        else unknown_key(key, k);
      }
    } else if (key == "strategies") {
      if (!v.is_array()) throw UsageError("config: strategies must be a list");
      c.strategies.clear();
      for (const Json& s : v) c.strategies.push_back(json_string(s, key));
    } else if (key == "caps") {
      require_object(v, key);
      for (const auto& [k, t] : v.items()) {
        if (k == "cost") c.caps.cost = json_real(t, k);
        else if (k == "accuracy") c.caps.accuracy = json_real(t, k);
        else if (k == "krr") c.caps.krr = json_real(t, k);
        else unknown_key(key, k);
      }
    } else if (key == "n_seeds") {
      c.n_seeds = json_count(v, key);
    } else if (key == "threads") {
      c.threads = static_cast<unsigned>(json_count(v, key));
    } else if (key == "validation") {
      c.validation = enum_from(kValidationNames, json_string(v, key), key);
    } else if (key == "highlight_basis") {
      c.highlight_basis = enum_from(kBasisNames, json_string(v, key), key);
    } else if (key == "jaccard_pooling") {
      c.jaccard_pooling = enum_from(kPoolingNames, json_string(v, key), key);
    } else if (key == "jaccard_denominator") {
      c.jaccard_denominator =
          enum_from(kDenominatorNames, json_string(v, key), key);
    } else if (key == "krr") {
      require_object(v, key);
      for (const auto& [k, t] : v.items()) {
        if (k == "k") c.krr_k = json_count(t, k);
        else if (k == "resamples") c.krr_resamples = json_count(t, k);
        else if (k == "k_cap") c.krr_k_cap = json_count(t, k);
        else unknown_key(key, k);
      }
    } else if (key == "sample") {
      require_object(v, key);
      for (const auto& [k, t] : v.items()) {
        if (k == "n_interviews") {
          if (t.is_null()) c.n_interviews.reset();
          else c.n_interviews = json_count(t, k);
        } else if (k == "max_consecutive") {
          c.max_consecutive = json_count(t, k);
        } else {
          unknown_key(key, k);
        }
      }
    } else if (key == "split") {
      require_object(v, key);
      for (const auto& [k, t] : v.items()) {
        if (k == "train") c.split.train = json_real(t, k);
        else if (k == "dev") c.split.dev = json_real(t, k);
        else if (k == "test") c.split.test = json_real(t, k);
        else unknown_key(key, k);
      }
    } else if (key == "dataset") {
      if (v.is_null()) c.dataset.reset();
      else c.dataset = json_string(v, key);
    } else if (key == "system") {
      c.system = json_string(v, key);
    } else {
      unknown_key("", key);
    }
  }
}

RunConfig load_config_file(const std::string& path) {
  RunConfig c;
  try {
    apply_config_json(c, io::read_json(path));
  } catch (const UsageError& e) {
    throw UsageError(path + ": " + e.what());
  }
  return c;
}

Json config_json(const RunConfig& c) {
  Json j;
  j["seed"] = c.seed;
  Json paths = Json::object();
  for (const auto& [role, p] : c.paths) paths[role] = p;
  j["paths"] = paths;
  j["thresholds"] = Json{{"entropy_t", c.entropy_t},
                         {"tau_cls", c.thresholds.tau_cls},
                         {"tau_hl", c.thresholds.tau_hl},
                         {"max_gap", c.match.max_gap},
                         {"min_coverage", c.match.min_coverage}};
  Json strategies = Json::array();
  for (const auto& s : strategy_grid(c))
    strategies.push_back(allocation::to_string(s));
  j["strategies"] = strategies;
  j["caps"] = Json{{"cost", c.caps.cost},
                   {"accuracy", c.caps.accuracy},
                   {"krr", c.caps.krr}};
  j["n_seeds"] = c.n_seeds;
  j["validation"] = enum_name(kValidationNames, c.validation);
  j["highlight_basis"] = enum_name(kBasisNames, c.highlight_basis);
  j["jaccard_pooling"] = enum_name(kPoolingNames, c.jaccard_pooling);
  j["jaccard_denominator"] = enum_name(kDenominatorNames, c.jaccard_denominator);
  j["krr"] = Json{{"k", c.krr_k},
                  {"resamples", c.krr_resamples},
                  {"k_cap", c.krr_k_cap}};
  j["sample"] = Json{
      {"n_interviews", c.n_interviews ? Json(*c.n_interviews) : Json(nullptr)},
      {"max_consecutive", c.max_consecutive}};
  j["split"] = Json{
      {"train", c.split.train}, {"dev", c.split.dev}, {"test", c.split.test}};
  j["dataset"] = c.dataset ? Json(*c.dataset) : Json(nullptr);
  j["system"] = c.system;
  return j;
}

void set_option(RunConfig& c, std::string_view name, std::string_view value) {
  if (name == "seed") c.seed = parse_u64(value, name);
  else if (name == "entropy_t") c.entropy_t = parse_double(value, name);
  else if (name == "tau_cls") c.thresholds.tau_cls = parse_double(value, name);
  else if (name == "tau_hl") c.thresholds.tau_hl = parse_double(value, name);
  else if (name == "max_gap") c.match.max_gap = parse_u64(value, name);
  else if (name == "min_coverage") c.match.min_coverage = parse_double(value, name);
  else if (name == "cost_cap") c.caps.cost = parse_double(value, name);
  else if (name == "accuracy_cap") c.caps.accuracy = parse_double(value, name);
  else if (name == "krr_cap") c.caps.krr = parse_double(value, name);
  else if (name == "n_seeds") c.n_seeds = parse_u64(value, name);
  else if (name == "threads") c.threads = static_cast<unsigned>(parse_u64(value, name));
  else if (name == "validation") c.validation = enum_from(kValidationNames, value, name);
  else if (name == "highlight_basis") c.highlight_basis = enum_from(kBasisNames, value, name);
  else if (name == "jaccard_pooling") c.jaccard_pooling = enum_from(kPoolingNames, value, name);
  else if (name == "jaccard_denominator") c.jaccard_denominator = enum_from(kDenominatorNames, value, name);
  else if (name == "krr_k") c.krr_k = parse_u64(value, name);
  else if (name == "krr_resamples") c.krr_resamples = parse_u64(value, name);
  else if (name == "krr_k_cap") c.krr_k_cap = parse_u64(value, name);
  else if (name == "n_interviews") c.n_interviews = parse_u64(value, name);
  else if (name == "max_consecutive") c.max_consecutive = parse_u64(value, name);
  else if (name == "train_ratio") c.split.train = parse_double(value, name);
  else if (name == "dev_ratio") c.split.dev = parse_double(value, name);
  else if (name == "test_ratio") c.split.test = parse_double(value, name);
  else if (name == "dataset") c.dataset = std::string(value);
  else if (name == "system") c.system = std::string(value);
  else throw UsageError("unknown option '" + std::string(name) + "'");
}

}  // namespace paradial
