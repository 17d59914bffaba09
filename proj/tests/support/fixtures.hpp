// tests/support/fixtures.hpp

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

#ifndef PARADIAL_TESTS_FIXTURES_HPP_
#define PARADIAL_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "paradial/annotations.hpp"
#include "paradial/corpus.hpp"

namespace fixtures {

inline std::string words(std::size_t n, const std::string& stem = "w") {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) s += ' ';
    s += stem + std::to_string(i);
  }
  return s;
}

inline paradial::corpus::UtterancePair make_pair(const std::string& id,
                                                 std::size_t guest_words,
                                                 std::size_t host_words) {
  paradial::corpus::UtterancePair p;
  p.pair_id = id;
  const auto parsed = paradial::corpus::parse_pair_id(id);
  p.interview_id = parsed ? parsed->first : id;
  p.guest_turn_index = parsed ? parsed->second : 0;
  p.guest_speaker = "GUEST";
  p.host_speaker = "HOST";
  p.guest_text = words(guest_words, "g");
  p.host_text = words(host_words, "h");
  return p;
}

struct SetSpec {
  std::string name;
  std::size_t n_pairs;
  std::size_t n_paraphrases;
  std::vector<std::size_t> annotators;  // per pair
};

// Three annotation sets shaped like the released data: sizes, majority
// paraphrase counts and annotation totals are fixed by construction.
inline std::vector<SetSpec> release_shape() {
  std::vector<SetSpec> specs;
  SetSpec bal{"BALANCED", 100, 54, {}};
  for (std::size_t i = 0; i < 100; ++i) bal.annotators.push_back(i < 90 ? 20 : 21);
  SetSpec rnd{"RANDOM", 100, 13, {}};
  for (std::size_t i = 0; i < 100; ++i) rnd.annotators.push_back(i < 70 ? 6 : 5);
  SetSpec para{"PARA", 400, 254, {}};
  for (std::size_t i = 0; i < 400; ++i) para.annotators.push_back(i < 201 ? 8 : 7);
  specs.push_back(bal);
  specs.push_back(rnd);
  specs.push_back(para);
  return specs;
}

struct Dataset {
  std::vector<paradial::corpus::UtterancePair> pairs;
  std::vector<paradial::annotations::Annotation> annotations;
};

// Paraphrase pairs get a strict majority of positive votes, the others at
// most half (an exact half on every fourth even-sized pair, exercising the
// tie rule). Positive voters highlight words on both sides, negative voters
// none, so the data passes strict validation.
inline Dataset release_fixture() {
  Dataset d;
  std::size_t serial = 0;
  for (const SetSpec& spec : release_shape()) {
    for (std::size_t i = 0; i < spec.n_pairs; ++i, ++serial) {
      const std::string id = spec.name + "-" + std::to_string(i);
      d.pairs.push_back(make_pair(id, 12 + i % 7, 10 + i % 5));
      const std::size_t n = spec.annotators[i];
      const bool para = i < spec.n_paraphrases;
      std::size_t positive;
      if (para) {
        positive = n / 2 + 1 + i % 3;
        if (positive > n) positive = n;
      } else if (n % 2 == 0 && i % 4 == 0) {
        positive = n / 2;
      } else {
        positive = i % (n / 2 + 1);
        if (2 * positive >= n) positive = n / 2 - (n % 2 == 0 ? 1 : 0);
      }
      for (std::size_t r = 0; r < n; ++r) {
        paradial::annotations::Annotation a;
        a.pair_id = id;
        a.annotator_id = "R" + std::to_string((serial * 7 + r * 13) % 97);
        // Annotator ids must be unique within a pair.
        a.annotator_id += "-" + std::to_string(r);
        a.is_paraphrase = r < positive;
        if (a.is_paraphrase) {
          a.guest_highlight = {2, 3, 4 + r % 3};
          a.host_highlight = {1, 2 + r % 2};
        }
        a.dataset = spec.name;
        d.annotations.push_back(a);
      }
    }
  }
  return d;
}

}  // namespace fixtures

#endif  // PARADIAL_TESTS_FIXTURES_HPP_
