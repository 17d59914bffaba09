// tests/unit/annotations_test.cpp

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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "paradial/annotations.hpp"
#include "paradial/errors.hpp"

using namespace paradial;
using namespace paradial::annotations;

namespace {

Annotation ann(const std::string& pair, const std::string& who, bool label,
               WordSet guest = {}, WordSet host = {}) {
  Annotation a;
  a.pair_id = pair;
  a.annotator_id = who;
  a.is_paraphrase = label;
  a.guest_highlight = std::move(guest);
  a.host_highlight = std::move(host);
  return a;
}

}  // namespace

TEST_CASE("validate") {
  std::vector<corpus::UtterancePair> pairs{fixtures::make_pair("NPR-1-3", 40, 10)};
  SUBCASE("well-formed") {
    std::vector<Annotation> anns{ann("NPR-1-3", "a", true, {0}, {1}),
                                 ann("NPR-1-3", "b", false)};
    const auto r = validate(anns, pairs, ValidationMode::kStrict);
    CHECK(r.violations.empty());
    CHECK(r.passed());
  }
  SUBCASE("out of range index") {
    std::vector<Annotation> anns{ann("NPR-1-3", "a", true, {999}, {1})};
    const auto r = validate(anns, pairs, ValidationMode::kStrict);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::kIndexOutOfRange);
    CHECK_FALSE(r.passed());
  }
  SUBCASE("duplicate record") {
    std::vector<Annotation> anns{ann("NPR-1-3", "a", false),
                                 ann("NPR-1-3", "a", false)};
    const auto r = validate(anns, pairs, ValidationMode::kStrict);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::kDuplicateRecord);
  }
  SUBCASE("label and highlight disagree") {
    std::vector<Annotation> anns{ann("NPR-1-3", "a", true, {1}, {}),
                                 ann("NPR-1-3", "b", false, {}, {2})};
    const auto r = validate(anns, pairs, ValidationMode::kLenient);
    REQUIRE(r.violations.size() == 2);
    CHECK(r.violations[0].kind == ViolationKind::kParaphraseWithoutHighlight);
    CHECK(r.violations[1].kind == ViolationKind::kHighlightWithoutParaphrase);
    CHECK(r.passed());  // lenient only reports
  }
  SUBCASE("unknown pair id names the id") {
    std::vector<Annotation> anns{ann("CNN-9-1", "a", false)};
    try {
      validate(anns, pairs, ValidationMode::kStrict);
      FAIL("no exception");
    } catch (const ValidationError& e) {
      CHECK(std::string(e.what()).find("CNN-9-1") != std::string::npos);
    }
  }
  SUBCASE("without pairs only record-level checks run") {
    std::vector<Annotation> anns{ann("X-1", "a", true, {999}, {1}),
                                 ann("X-1", "a", true, {1}, {1})};
    const auto r = validate(anns, ValidationMode::kStrict);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == ViolationKind::kDuplicateRecord);
  }
}

TEST_CASE("majority_label") {
  auto votes = [](std::size_t pos, std::size_t n) {
    std::vector<bool> v(n, false);
    std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(pos), true);
    return v;
  };
  CHECK_FALSE(majority_label(votes(9, 20)).is_paraphrase);
  CHECK(majority_label(votes(11, 20)).is_paraphrase);
  CHECK_FALSE(majority_label(votes(3, 6)).is_paraphrase);
  CHECK(majority_label(votes(11, 20)).positive_votes == 11);
  CHECK(majority_label(votes(11, 20)).n == 20);
  CHECK_THROWS_AS(majority_label({}), ValidationError);
}

TEST_CASE("majority_highlight") {
  std::vector<Annotation> five;
  // Word 0 by all, word 1 by 3 of 5, word 2 by 2 of 5.
  five.push_back(ann("p", "a", true, {0, 1, 2}, {0}));
  five.push_back(ann("p", "b", true, {0, 1, 2}, {0}));
  five.push_back(ann("p", "c", true, {0, 1}, {0}));
  five.push_back(ann("p", "d", false, {0}, {}));
  five.push_back(ann("p", "e", false, {0}, {}));
  CHECK(majority_highlight(five, Side::kGuest) == WordSet{0, 1});
  CHECK(majority_highlight(five, Side::kHost) == WordSet{0});
  // Among the three paraphrase voters, word 2 has 2 of 3.
  CHECK(majority_highlight(five, Side::kGuest, HighlightBasis::kParaphraseVoters) ==
        WordSet{0, 1, 2});
  // A third of the annotators is not a majority.
  std::vector<Annotation> three{ann("p", "a", true, {0, 5}, {0}),
                                ann("p", "b", true, {0}, {0}),
                                ann("p", "c", true, {0}, {0})};
  CHECK(majority_highlight(three, Side::kGuest) == WordSet{0});
}

TEST_CASE("aggregate matches a hand-computed oracle") {
  std::vector<corpus::UtterancePair> pairs{fixtures::make_pair("A-1", 10, 10),
                                           fixtures::make_pair("A-2", 10, 10)};
  std::vector<Annotation> anns{
      ann("A-1", "r1", true, {1, 2}, {3}),    ann("A-1", "r2", true, {2, 3}, {3}),
      ann("A-1", "r3", true, {2}, {3, 4}),    ann("A-1", "r4", false),
      ann("A-1", "r5", false),                ann("A-2", "r1", true, {0}, {0}),
      ann("A-2", "r2", true, {0}, {0}),       ann("A-2", "r3", false),
      ann("A-2", "r4", false),
  };
  const auto agg = aggregate(pairs, anns);
  REQUIRE(agg.size() == 2);
  // A-1: 3 of 5 positive; word 2 has 3/5 on the guest side, word 3 3/5 on
  // the host side; entropy of 3/5 is 0.97095 bits.
  CHECK(agg[0].pair_id == "A-1");
  CHECK(agg[0].is_paraphrase);
  CHECK(agg[0].positive_votes == 3);
  CHECK(agg[0].n_annotations == 5);
  CHECK(agg[0].guest_gold == WordSet{2});
  CHECK(agg[0].host_gold == WordSet{3});
  CHECK(agg[0].vote_entropy == doctest::Approx(0.9709505945));
  // A-2: 2 of 4 is a tie, so negative with empty gold sets.
  CHECK_FALSE(agg[1].is_paraphrase);
  CHECK(agg[1].guest_gold.empty());
  CHECK(agg[1].vote_entropy == doctest::Approx(1.0));
}

TEST_CASE("aggregate edge cases") {
  std::vector<corpus::UtterancePair> pairs{fixtures::make_pair("A-1", 10, 10)};
  SUBCASE("single annotator is mirrored") {
    std::vector<Annotation> one{ann("A-1", "r", true, {1, 2}, {4})};
    const auto agg = aggregate(pairs, one);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].is_paraphrase);
    CHECK(agg[0].guest_gold == WordSet{1, 2});
    CHECK(agg[0].host_gold == WordSet{4});
    CHECK(agg[0].vote_entropy == 0.0);
  }
  SUBCASE("label and highlight majorities are independent") {
    // 2 of 3 positive, but their highlights never overlap.
    std::vector<Annotation> anns{ann("A-1", "a", true, {1}, {1}),
                                 ann("A-1", "b", true, {2}, {2}),
                                 ann("A-1", "c", false)};
    const auto agg = aggregate(pairs, anns);
    CHECK(agg[0].is_paraphrase);
    CHECK(agg[0].guest_gold.empty());
    CHECK(agg[0].host_gold.empty());
  }
  SUBCASE("duplicates are counted once") {
    std::vector<Annotation> anns{ann("A-1", "a", true, {1}, {1}),
                                 ann("A-1", "a", true, {1}, {1}),
                                 ann("A-1", "b", false)};
    const auto agg = aggregate(pairs, anns);
    CHECK(agg[0].n_annotations == 2);
    CHECK_FALSE(agg[0].is_paraphrase);
  }
  SUBCASE("unknown pair") {
    std::vector<Annotation> anns{ann("B-1", "a", false)};
    CHECK_THROWS_AS(aggregate(pairs, anns), ValidationError);
  }
}

TEST_CASE("aggregate is invariant under annotation order") {
  const auto d = fixtures::release_fixture();
  const auto base = aggregate(d.pairs, d.annotations);
  auto shuffled = d.annotations;
  std::mt19937_64 rng(5);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto again = aggregate(d.pairs, shuffled, {HighlightBasis::kAllAnnotators, 3});
  REQUIRE(again.size() == base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    CHECK(again[i].pair_id == base[i].pair_id);
    CHECK(again[i].positive_votes == base[i].positive_votes);
    CHECK(again[i].guest_gold == base[i].guest_gold);
    CHECK(again[i].host_gold == base[i].host_gold);
  }
}

TEST_CASE("dataset statistics of the release-shaped fixture") {
  const auto d = fixtures::release_fixture();
  CHECK(validate(d.annotations, d.pairs, ValidationMode::kStrict).passed());
  const auto stats = dataset_statistics(aggregate(d.pairs, d.annotations));
  REQUIRE(stats.size() == 4);
  CHECK(stats[0].dataset == "BALANCED");
  CHECK(stats[0].n_paraphrases == 54);
  CHECK(stats[0].mean_annotations == doctest::Approx(20.1));
  CHECK(stats[1].dataset == "PARA");
  CHECK(stats[1].n_paraphrases == 254);
  CHECK(stats[1].mean_annotations == doctest::Approx(7.5025));
  CHECK(stats[2].dataset == "RANDOM");
  CHECK(stats[2].n_paraphrases == 13);
  CHECK(stats[2].mean_annotations == doctest::Approx(5.7));
  CHECK(stats[3].dataset == "TOTAL");
  CHECK(stats[3].n_pairs == 600);
  CHECK(stats[3].n_paraphrases == 321);
  CHECK(stats[3].n_annotations == 5581);
}

TEST_CASE("group_by_pair") {
  std::vector<corpus::UtterancePair> pairs{fixtures::make_pair("A-1", 7, 9),
                                           fixtures::make_pair("A-2", 3, 3)};
  std::vector<Annotation> anns{ann("A-1", "a", false), ann("A-1", "a", true, {1}, {1}),
                               ann("A-1", "b", false)};
  const auto g = group_by_pair(pairs, anns);
  REQUIRE(g.size() == 1);
  CHECK(g[0].guest_words == 7);
  CHECK(g[0].host_words == 9);
  CHECK(g[0].annotations.size() == 2);
  CHECK_FALSE(g[0].annotations[0].is_paraphrase);
  const auto loose = group_by_pair(anns);
  REQUIRE(loose.size() == 1);
  CHECK(loose[0].guest_words == 0);
  CHECK(loose[0].annotations.size() == 2);
}
