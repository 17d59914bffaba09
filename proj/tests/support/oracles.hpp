// tests/support/oracles.hpp

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

#ifndef PARADIAL_TESTS_ORACLES_HPP_
#define PARADIAL_TESTS_ORACLES_HPP_

// Slow reference implementations used only by tests. They follow the
// textbook definitions directly and share no code with the library.

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

// Rows are units, columns raters; -1 marks a missing value.
using Matrix = std::vector<std::vector<int>>;

// Nominal Krippendorff alpha by enumerating ordered pairs of distinct raters
// within each unit. Each pair adds 1/(m_u - 1) to the coincidence cell of its
// two values.
inline std::optional<double> alpha_nominal(const Matrix& m) {
  std::map<std::pair<int, int>, double> o;
  for (const auto& unit : m) {
    std::vector<int> values;
    for (int v : unit)
      if (v >= 0) values.push_back(v);
    const std::size_t mu = values.size();
    if (mu < 2) continue;
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j)
        if (i != j) o[{values[i], values[j]}] += 1.0 / double(mu - 1);
  }
  std::map<int, double> nc;
  double n = 0.0;
  for (const auto& [ck, w] : o) {
    nc[ck.first] += w;
    n += w;
  }
  double d_o = 0.0;
  for (const auto& [ck, w] : o)
    if (ck.first != ck.second) d_o += w;
  d_o /= n;
  double d_e = 0.0;
  for (const auto& [c, a] : nc)
    for (const auto& [k, b] : nc)
      if (c != k) d_e += a * b;
  if (n < 2.0) return std::nullopt;
  d_e /= n * (n - 1.0);
  if (d_e == 0.0) return std::nullopt;
  return 1.0 - d_o / d_e;
}

// Mean over rater cells of agreement with the majority of the other raters,
// a tie counting one half.
inline std::optional<double> loo_accuracy(const Matrix& m) {
  double sum = 0.0;
  std::size_t cells = 0;
  for (const auto& unit : m) {
    std::vector<int> values;
    for (int v : unit)
      if (v >= 0) values.push_back(v);
    if (values.size() < 2) continue;
    for (std::size_t i = 0; i < values.size(); ++i) {
      int yes = 0, no = 0;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (j == i) continue;
        (values[j] == 1 ? yes : no) += 1;
      }
      if (yes == no) sum += 0.5;
      else if ((yes > no) == (values[i] == 1)) sum += 1.0;
      ++cells;
    }
  }
  if (cells == 0) return std::nullopt;
  return sum / double(cells);
}

inline double choose(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// Probability that two disjoint uniformly drawn k-subsets of n labels (with
// `positives` positive labels) have the same majority, ties negative. Sums
// over the positives a, b in the first and second subset.
inline double krr_exact(std::size_t positives, std::size_t n, std::size_t k) {
  const std::size_t negatives = n - positives;
  double agree = 0.0;
  for (std::size_t a = 0; a <= k; ++a) {
    const double pa = choose(positives, a) * choose(negatives, k - a) /
                      choose(n, k);
    if (pa == 0.0) continue;
    for (std::size_t b = 0; b <= k; ++b) {
      if (a + b > positives || (k - a) + (k - b) > negatives) continue;
      const double pb = choose(positives - a, b) *
                        choose(negatives - (k - a), k - b) / choose(n - k, k);
      if ((2 * a > k) == (2 * b > k)) agree += pa * pb;
    }
  }
  return agree;
}

inline double jaccard(const std::set<std::size_t>& a,
                      const std::set<std::size_t>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::set<std::size_t> u = a, i;
  u.insert(b.begin(), b.end());
  for (std::size_t x : a)
    if (b.count(x)) i.insert(x);
  return double(i.size()) / double(u.size());
}

inline double entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

}  // namespace oracle

#endif  // PARADIAL_TESTS_ORACLES_HPP_
