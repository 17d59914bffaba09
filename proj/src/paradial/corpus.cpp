// paradial/corpus.cpp

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

#include "paradial/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "paradial/errors.hpp"
#include "paradial/rng.hpp"
#include "paradial/text.hpp"

namespace paradial::corpus {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Program program_from(std::string_view id, std::string_view program_field) {
  if (text::starts_with_icase(id, "NPR-")) return Program::kNpr;
  if (text::starts_with_icase(id, "CNN-")) return Program::kCnn;
  const std::string p = text::to_lower_ascii(text::trim(program_field));
  if (p == "npr") return Program::kNpr;
  if (p == "cnn") return Program::kCnn;
  return Program::kOther;
}

bool within_word_bounds(std::string_view s) {
  const std::size_t n = text::word_count(s);
  return n >= kMinPairWords && n <= kMaxPairWords;
}

}  // namespace

std::string_view program_name(Program program) {
  switch (program) {
    case Program::kNpr:
      return "NPR";
    case Program::kCnn:
      return "CNN";
    case Program::kOther:
      break;
  }
  return "OTHER";
}

std::string make_pair_id(std::string_view interview_id,
                         std::size_t guest_turn_index) {
  return std::string(interview_id) + "-" + std::to_string(guest_turn_index);
}

std::optional<std::pair<std::string, std::size_t>> parse_pair_id(
    std::string_view pair_id) {
  const std::size_t dash = pair_id.rfind('-');
  if (dash == std::string_view::npos || dash == 0 ||
      dash + 1 == pair_id.size())
    return std::nullopt;
  const std::string_view digits = pair_id.substr(dash + 1);
  std::size_t index = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    return std::nullopt;
  return std::make_pair(std::string(pair_id.substr(0, dash)), index);
}

Interview make_interview(std::string id, std::string_view program_field,
                         std::optional<std::string> date, std::string summary,
                         const std::vector<std::string>& utterances,
                         const std::vector<std::string>& speakers) {
  if (utterances.empty())
    throw FormatError("interview " + id + " has no utterances");
  if (utterances.size() != speakers.size())
    throw FormatError("interview " + id + ": " +
                      std::to_string(utterances.size()) + " utterances but " +
                      std::to_string(speakers.size()) + " speaker entries");
  Interview interview;
  interview.program = program_from(id, program_field);
  interview.id = std::move(id);
  interview.date = std::move(date);
  interview.summary = std::move(summary);
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < utterances.size(); ++i) {
    auto [it, inserted] =
        label_index.emplace(speakers[i], interview.speaker_labels.size());
    if (inserted) interview.speaker_labels.push_back(speakers[i]);
    interview.turns.push_back(
        Turn{it->second, std::string(text::trim(utterances[i])), i});
  }
  return interview;
}

std::vector<std::string> canonical_speaker_labels(
    std::span<const std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::string> keys;
  keys.reserve(n);
  for (const auto& label : labels)
    keys.push_back(text::to_lower_ascii(text::trim(label)));

  DisjointSets groups(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (keys[i].empty()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (keys[j].empty()) continue;
      if (keys[i].find(keys[j]) != std::string::npos ||
          keys[j].find(keys[i]) != std::string::npos)
        groups.unite(i, j);
    }
  }

  // Longest trimmed label per group; strict '>' keeps the earliest on ties.
  std::vector<std::size_t> best(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = groups.find(i);
    if (best[root] == n || keys[i].size() > keys[best[root]].size())
      best[root] = i;
  }
  std::vector<std::string> canonical;
  canonical.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    canonical.emplace_back(text::trim(labels[best[groups.find(i)]]));
  return canonical;
}

Interview canonicalize_speakers(Interview interview) {
  const std::vector<std::string> canonical =
      canonical_speaker_labels(interview.speaker_labels);
  std::vector<std::string> labels;
  std::vector<std::size_t> remap(canonical.size());
  for (std::size_t i = 0; i < canonical.size(); ++i) {
    auto it = std::find(labels.begin(), labels.end(), canonical[i]);
    remap[i] = static_cast<std::size_t>(it - labels.begin());
    if (it == labels.end()) labels.push_back(canonical[i]);
  }
  for (auto& turn : interview.turns) turn.speaker = remap[turn.speaker];
  interview.speaker_labels = std::move(labels);
  return interview;
}

TwoPersonVerdict classify_two_person(const Interview& interview) {
  if (interview.speaker_labels.size() != 2)
    return TwoPersonVerdict::kNotTwoPerson;
  const std::string& second = interview.speaker_labels[1];
  if (text::contains_icase(second, "host") ||
      text::contains_icase(second, "anchor"))
    return TwoPersonVerdict::kSecondSpeakerIsHost;
  return TwoPersonVerdict::kKept;
}

std::vector<Interview> filter_two_person(std::vector<Interview> interviews) {
  std::vector<Interview> kept;
  for (auto& interview : interviews) {
    if (classify_two_person(interview) == TwoPersonVerdict::kKept)
      kept.push_back(std::move(interview));
  }
  return kept;
}

std::vector<Turn> merge_consecutive_turns(const Interview& interview) {
  std::vector<Turn> merged;
  for (const auto& turn : interview.turns) {
    if (!merged.empty() && merged.back().speaker == turn.speaker) {
      if (turn.text.empty()) continue;
      if (!merged.back().text.empty()) merged.back().text.push_back(' ');
      merged.back().text += turn.text;
    } else {
      merged.push_back(turn);
    }
  }
  return merged;
}

std::vector<UtterancePair> extract_pairs(const Interview& interview) {
  const std::vector<Turn> turns = merge_consecutive_turns(interview);
  if (turns.size() < kMinInterviewTurns) return {};

  constexpr std::size_t kHost = 0;
  constexpr std::size_t kGuest = 1;
  std::vector<std::size_t> starts;  // guest turn followed by a host turn
  for (std::size_t i = 0; i + 1 < turns.size(); ++i) {
    if (turns[i].speaker == kGuest && turns[i + 1].speaker == kHost)
      starts.push_back(i);
  }
  if (starts.size() <= 2 * kTrimmedPairsPerEnd) return {};

  std::vector<UtterancePair> pairs;
  for (std::size_t k = kTrimmedPairsPerEnd;
       k < starts.size() - kTrimmedPairsPerEnd; ++k) {
    const Turn& guest = turns[starts[k]];
    const Turn& host = turns[starts[k] + 1];
    if (!within_word_bounds(guest.text) || !within_word_bounds(host.text))
      continue;
    UtterancePair pair;
    pair.pair_id = make_pair_id(interview.id, guest.source_index);
    pair.interview_id = interview.id;
    pair.guest_turn_index = guest.source_index;
    pair.guest_speaker = interview.speaker_labels.at(kGuest);
    pair.host_speaker = interview.speaker_labels.at(kHost);
    pair.guest_text = guest.text;
    pair.host_text = host.text;
    pair.summary = interview.summary;
    pair.date = interview.date;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

SampleResult sample_pairs(std::span<const UtterancePair> pairs,
                          std::size_t n_interviews,
                          std::size_t max_consecutive, std::uint64_t seed) {
  if (max_consecutive == 0)
    throw UsageError("max_consecutive must be at least 1");
  std::vector<std::string> order;
  std::unordered_map<std::string, std::vector<std::size_t>> by_interview;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [it, inserted] = by_interview.try_emplace(pairs[i].interview_id);
    if (inserted) order.push_back(pairs[i].interview_id);
    it->second.push_back(i);
  }

  SampleResult result;
  if (n_interviews > order.size()) {
    result.warnings.push_back(
        "requested " + std::to_string(n_interviews) + " interviews but only " +
        std::to_string(order.size()) + " are available; taking all");
    n_interviews = order.size();
  }
  RandomStream draw = derive_stream(seed, "sample:interviews");
  draw.shuffle(order);
  order.resize(n_interviews);

  for (const auto& id : order) {
    const auto& members = by_interview.at(id);
    const std::size_t take = std::min(max_consecutive, members.size());
    RandomStream window = derive_stream(seed, "sample:window:" + id);
    const std::size_t start = window.below(members.size() - take + 1);
    for (std::size_t k = start; k < start + take; ++k)
      result.pairs.push_back(pairs[members[k]]);
  }
  return result;
}

DatasetSplit split_dataset(std::span<const UtterancePair> pairs,
                           SplitRatios ratios, std::uint64_t seed) {
  for (double r : {ratios.train, ratios.dev, ratios.test}) {
    if (!(r >= 0.0 && r <= 1.0))
      throw UsageError("split ratios must lie in [0, 1]");
  }
  if (std::abs(ratios.train + ratios.dev + ratios.test - 1.0) > 1e-9)
    throw UsageError("split ratios must sum to 1");
  const std::size_t n = pairs.size();
  if (n < 3)
    throw ValidationError("need at least 3 pairs to split, got " +
                          std::to_string(n));
  std::unordered_set<std::string> seen;
  for (const auto& p : pairs) {
    if (!seen.insert(p.pair_id).second)
      throw ValidationError("duplicate pair_id " + p.pair_id);
  }

  // The epsilon absorbs representation error such as 0.15 * 600.
  const auto part = [n](double ratio) {
    return static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * ratio + 1e-9));
  };
  const std::size_t n_dev = part(ratios.dev);
  const std::size_t n_test = part(ratios.test);
  const std::size_t n_train = n - n_dev - n_test;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  RandomStream stream = derive_stream(seed, "split");
  stream.shuffle(order);

  enum : unsigned char { kTrain, kDev, kTest };
  std::vector<unsigned char> assignment(n);
  for (std::size_t k = 0; k < n; ++k) {
    assignment[order[k]] = k < n_train ? kTrain
                           : k < n_train + n_dev ? kDev
                                                 : kTest;
  }
  DatasetSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    auto& target = assignment[i] == kTrain ? split.train
                   : assignment[i] == kDev ? split.dev
                                           : split.test;
    target.push_back(pairs[i]);
  }
  return split;
}

}  // namespace paradial::corpus
