// tests/unit/metrics_test.cpp

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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "paradial/errors.hpp"
#include "paradial/metrics.hpp"

using namespace paradial;
using namespace paradial::metrics;
using annotations::AnnotatedPair;
using annotations::Annotation;

namespace {

LabelMatrix to_label_matrix(const oracle::Matrix& m) {
  std::vector<std::string> items, raters;
  for (std::size_t i = 0; i < m.size(); ++i) items.push_back("i" + std::to_string(i));
  for (std::size_t r = 0; r < m[0].size(); ++r) raters.push_back("r" + std::to_string(r));
  LabelMatrix lm(items, raters);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t r = 0; r < m[i].size(); ++r)
      if (m[i][r] >= 0) lm.set(i, r, m[i][r] == 1);
  return lm;
}

oracle::Matrix random_matrix(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> items(2, 12), raters(2, 6), cell(0, 9);
  const int n_items = items(rng);
  const int n_raters = raters(rng);
  oracle::Matrix m(n_items, std::vector<int>(n_raters));
  const int bias = cell(rng);
  for (auto& row : m)
    for (auto& c : row) {
      const int v = cell(rng);
      c = v == 0 ? -1 : (v <= bias ? 1 : 0);
    }
  return m;
}

Annotation hl(const std::string& who, bool label, WordSet g, WordSet h) {
  Annotation a;
  a.pair_id = "p";
  a.annotator_id = who;
  a.is_paraphrase = label;
  a.guest_highlight = std::move(g);
  a.host_highlight = std::move(h);
  return a;
}

}  // namespace

TEST_CASE("jaccard") {
  CHECK(jaccard({1, 2}, {1, 2}) == 1.0);
  CHECK(jaccard({1, 2}, {3, 4}) == 0.0);
  CHECK(jaccard({0, 1, 2}, {1, 2, 3}) == 0.5);
  CHECK(jaccard({}, {}) == 1.0);
  CHECK(jaccard({}, {1}) == 0.0);
  CHECK(jaccard({1, 5}, {5, 9, 11}) == jaccard({5, 9, 11}, {1, 5}));
}

TEST_CASE("entropy_binary") {
  CHECK(entropy_binary(2, 4) == 1.0);
  CHECK(entropy_binary(4, 4) == 0.0);
  CHECK(entropy_binary(0, 4) == 0.0);
  CHECK(entropy_binary(3, 4) == doctest::Approx(0.8113).epsilon(1e-4));
  CHECK(entropy_binary(1, 4) == entropy_binary(3, 4));
  CHECK(entropy_binary(7, 20) == doctest::Approx(oracle::entropy(0.35)));
  CHECK_THROWS_AS(entropy_binary(0, 0), ValidationError);
  CHECK_THROWS_AS(entropy_binary(5, 4), ValidationError);
}

TEST_CASE("alpha_nominal basics") {
  SUBCASE("perfect agreement, both classes") {
    const auto a = alpha_nominal(to_label_matrix({{1, 1}, {0, 0}, {1, 1}, {0, 0}}));
    REQUIRE(a);
    CHECK(*a == doctest::Approx(1.0));
  }
  SUBCASE("single value is undefined") {
    CHECK_FALSE(alpha_nominal(to_label_matrix({{1, 1}, {1, 1}, {1, -1}})));
  }
  SUBCASE("fewer than two pairable items is an error") {
    CHECK_THROWS_AS(alpha_nominal(to_label_matrix({{1, 0}, {1, -1}})),
                    ValidationError);
  }
  SUBCASE("relabeling invariance") {
    oracle::Matrix m{{1, 0, 1}, {0, 0, -1}, {1, 1, 1}, {0, 1, 0}};
    oracle::Matrix flipped = m;
    for (auto& row : flipped)
      for (auto& c : row)
        if (c >= 0) c = 1 - c;
    CHECK(*alpha_nominal(to_label_matrix(m)) ==
          doctest::Approx(*alpha_nominal(to_label_matrix(flipped))));
  }
}

TEST_CASE("alpha_nominal matches the definitional oracle") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const auto m = random_matrix(rng);
    const LabelMatrix lm = to_label_matrix(m);
    std::size_t pairable = 0;
    for (std::size_t i = 0; i < lm.n_items(); ++i)
      pairable += lm.item_labels(i).size() >= 2 ? 1 : 0;
    if (pairable < 2) continue;
    const auto expected = oracle::alpha_nominal(m);
    const auto got = alpha_nominal(lm);
    REQUIRE(expected.has_value() == got.has_value());
    if (got) {
      CHECK(std::abs(*got - *expected) < 1e-10);
      ++compared;
    }
  }
  CHECK(compared >= 100);
}

TEST_CASE("alpha from category counts on a multi-valued reference") {
  // Four observers, twelve units, values 1..5 with gaps. Known value
  // 113/152.
  const int nan = -1;
  const oracle::Matrix by_observer{{1, 2, 3, 3, 2, 1, 4, 1, 2, nan, nan, nan},
                                   {1, 2, 3, 3, 2, 2, 4, 1, 2, 5, nan, 3},
                                   {nan, 3, 3, 3, 2, 3, 4, 2, 2, 5, 1, nan},
                                   {1, 2, 3, 3, 2, 4, 4, 1, 2, 5, 1, nan}};
  std::vector<std::vector<std::size_t>> units;
  oracle::Matrix by_unit(12);
  for (std::size_t u = 0; u < 12; ++u) {
    std::vector<std::size_t> counts(6, 0);
    for (const auto& obs : by_observer) {
      if (obs[u] != nan) ++counts[obs[u]];
      by_unit[u].push_back(obs[u]);
    }
    units.push_back(counts);
  }
  const auto a = alpha_nominal_counts(units);
  REQUIRE(a);
  CHECK(*a == doctest::Approx(113.0 / 152.0).epsilon(1e-12));
  CHECK(*oracle::alpha_nominal(by_unit) == doctest::Approx(113.0 / 152.0).epsilon(1e-12));
}

TEST_CASE("loo_majority_accuracy") {
  CHECK(*loo_majority_accuracy(to_label_matrix({{1, 1, 1}, {0, 0, 0}})) == 1.0);
  CHECK(*loo_majority_accuracy(to_label_matrix({{1, 1, 0}})) ==
        doctest::Approx(1.0 / 3.0));
  CHECK_FALSE(loo_majority_accuracy(to_label_matrix({{1, -1}})));
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_matrix(rng);
    const auto expected = oracle::loo_accuracy(m);
    const auto got = loo_majority_accuracy(to_label_matrix(m));
    REQUIRE(expected.has_value() == got.has_value());
    if (got) CHECK(std::abs(*got - *expected) < 1e-12);
  }
}

TEST_CASE("unitizing alpha over words") {
  SUBCASE("identical highlights give 1") {
    AnnotatedPair p{"p", 6, 6,
                    {hl("a", true, {1, 2}, {0}), hl("b", true, {1, 2}, {0}),
                     hl("c", true, {1, 2}, {0})}};
    std::vector<AnnotatedPair> v{p};
    CHECK(*unitizing_alpha_words(v, Side::kGuest) == doctest::Approx(1.0));
  }
  SUBCASE("two annotators, four words, matches the oracle") {
    AnnotatedPair p{"p", 4, 4,
                    {hl("a", true, {0, 1}, {0}), hl("b", true, {1, 2}, {3})}};
    std::vector<AnnotatedPair> v{p};
    // Word x annotator matrix for the guest side.
    const oracle::Matrix m{{1, 0}, {1, 1}, {0, 1}, {0, 0}};
    CHECK(*unitizing_alpha_words(v, Side::kGuest) ==
          doctest::Approx(*oracle::alpha_nominal(m)).epsilon(1e-12));
  }
  SUBCASE("pairs with fewer than two positive votes do not count") {
    AnnotatedPair p{"p", 4, 4,
                    {hl("a", true, {0, 1}, {0}), hl("b", false, {}, {})}};
    std::vector<AnnotatedPair> v{p};
    CHECK_FALSE(unitizing_alpha_words(v, Side::kGuest));
    CHECK_FALSE(mean_pairwise_jaccard(v, Side::kGuest));
  }
  SUBCASE("random pairs match the oracle on the stacked matrix") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
      std::uniform_int_distribution<int> n_pairs(1, 3), n_ann(2, 6), n_words(1, 8),
          coin(0, 2);
      std::vector<AnnotatedPair> pairs;
      oracle::Matrix stacked;
      const int np = n_pairs(rng);
      for (int k = 0; k < np; ++k) {
        AnnotatedPair p;
        p.pair_id = "p" + std::to_string(k);
        p.guest_words = static_cast<std::size_t>(n_words(rng));
        p.host_words = 3;
        const int na = n_ann(rng);
        int positives = 0;
        for (int r = 0; r < na; ++r) {
          Annotation a = hl("r" + std::to_string(r), coin(rng) > 0, {}, {});
          for (std::size_t w = 0; w < p.guest_words; ++w)
            if (a.is_paraphrase && coin(rng) > 0) a.guest_highlight.insert(w);
          positives += a.is_paraphrase ? 1 : 0;
          p.annotations.push_back(a);
        }
        if (positives >= 2) {
          for (std::size_t w = 0; w < p.guest_words; ++w) {
            std::vector<int> row;
            for (const auto& a : p.annotations)
              row.push_back(a.guest_highlight.count(w) ? 1 : 0);
            stacked.push_back(row);
          }
        }
        pairs.push_back(p);
      }
      const auto got = unitizing_alpha_words(pairs, Side::kGuest);
      if (stacked.empty()) {
        CHECK_FALSE(got);
        continue;
      }
      const auto expected = oracle::alpha_nominal(stacked);
      REQUIRE(expected.has_value() == got.has_value());
      if (got) CHECK(std::abs(*got - *expected) < 1e-10);
    }
  }
}

TEST_CASE("mean pairwise jaccard") {
  AnnotatedPair p{"p", 10, 10,
                  {hl("a", true, {0, 1, 2}, {1}), hl("b", true, {1, 2, 3}, {1}),
                   hl("c", true, {2, 3}, {}), hl("d", false, {}, {})}};
  std::vector<AnnotatedPair> v{p};
  // Pairs: ab 2/4, ac 1/4, bc 2/3.
  const double expected = (0.5 + 0.25 + 2.0 / 3.0) / 3.0;
  CHECK(*mean_pairwise_jaccard(v, Side::kGuest) == doctest::Approx(expected));
  // Host side: only a and b highlighted.
  CHECK(*mean_pairwise_jaccard(v, Side::kHost) == 1.0);

  AnnotatedPair q{"q", 10, 10,
                  {hl("a", true, {0}, {0}), hl("b", true, {1}, {0})}};
  std::vector<AnnotatedPair> both{p, q};
  CHECK(*mean_pairwise_jaccard(both, Side::kGuest) ==
        doctest::Approx((expected + 0.0) / 2.0));
  CHECK(*mean_pairwise_jaccard(both, Side::kGuest, JaccardPooling::kGlobal) ==
        doctest::Approx((0.5 + 0.25 + 2.0 / 3.0 + 0.0) / 4.0));
}

TEST_CASE("k-rater reliability") {
  SUBCASE("unanimous raters") {
    LabelMatrix m({"a", "b"}, {"1", "2", "3", "4"});
    for (std::size_t r = 0; r < 4; ++r) {
      m.set(0, r, true);
      m.set(1, r, false);
    }
    CHECK(*k_rater_reliability(m, 1, 50, 1) == 1.0);
    CHECK(*k_rater_reliability(m, 2, 50, 1) == 1.0);
  }
  SUBCASE("no usable item") {
    LabelMatrix m({"a"}, {"1", "2", "3"});
    for (std::size_t r = 0; r < 3; ++r) m.set(0, r, true);
    CHECK_FALSE(k_rater_reliability(m, 2, 10, 1));
    CHECK_THROWS_AS(k_rater_reliability(m, 0, 10, 1), UsageError);
  }
  SUBCASE("matches the hypergeometric oracle") {
    std::vector<KrrItem> items;
    for (int i = 0; i < 40; ++i) {
      std::vector<bool> labels(20, i % 2 == 0);
      for (int r = 0; r < 5; ++r) labels[(i + 3 * r) % 20] = i % 2 != 0;
      items.push_back({"item" + std::to_string(i), labels, 7});
    }
    const double expected = oracle::krr_exact(15, 20, 7);
    const auto got = k_rater_reliability(items, 2000, 3);
    // 80000 Bernoulli draws: standard error below 0.0015.
    CHECK(std::abs(*got - expected) < 0.006);
  }
  SUBCASE("deterministic and thread independent") {
    std::vector<KrrItem> items;
    std::mt19937_64 rng(1);
    for (int i = 0; i < 30; ++i) {
      std::vector<bool> labels;
      for (int r = 0; r < 9; ++r) labels.push_back(rng() % 2 == 0);
      items.push_back({"k" + std::to_string(i), labels, 3});
    }
    const auto a = k_rater_reliability(items, 200, 8, 1);
    const auto b = k_rater_reliability(items, 200, 8, 4);
    CHECK(*a == *b);
  }
}

TEST_CASE("agreement report") {
  AnnotatedPair p{"p", 5, 5,
                  {hl("a", true, {0, 1}, {1}), hl("b", true, {1}, {1}),
                   hl("c", false, {}, {})}};
  AnnotatedPair q{"q", 5, 5,
                  {hl("a", false, {}, {}), hl("b", false, {}, {}),
                   hl("c", false, {}, {})}};
  for (auto& a : q.annotations) a.pair_id = "q";
  std::vector<AnnotatedPair> v{p, q};
  const auto r = agreement_report("X", v, {});
  CHECK(r.dataset == "X");
  CHECK(r.n_items == 2);
  CHECK(r.n_annotations == 6);
  CHECK(r.n_qualifying_pairs == 1);
  REQUIRE(r.alpha_nominal);
  CHECK(*r.alpha_nominal == doctest::Approx(0.375));
  REQUIRE(r.loo_accuracy);
  REQUIRE(r.mean_jaccard_guest);
  CHECK(*r.mean_jaccard_guest == 0.5);
  REQUIRE(r.krr);
}
