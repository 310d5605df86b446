// Copyright 2026 The dnsga Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Reference implementations used only by tests. Deliberately naive.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

struct Point {
  double f1;
  double f2;
};

inline bool dominates(const Point& a, const Point& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2 && (a.f1 < b.f1 || a.f2 < b.f2);
}

// Peel off the non-dominated subset until nothing is left.
inline std::vector<std::vector<std::size_t>> naive_sort(const std::vector<Point>& pts) {
  std::vector<std::size_t> left(pts.size());
  std::iota(left.begin(), left.end(), 0);
  std::vector<std::vector<std::size_t>> fronts;
  while (!left.empty()) {
    std::vector<std::size_t> front, rest;
    for (std::size_t i : left) {
      bool dominated = false;
      for (std::size_t j : left) {
        if (dominates(pts[j], pts[i])) {
          dominated = true;
          break;
        }
      }
      (dominated ? rest : front).push_back(i);
    }
    fronts.push_back(front);
    left = rest;
  }
  return fronts;
}

// Counts cell centres of a g x g grid over [0,1]^2 dominated by the front.
inline double grid_hv(const std::vector<Point>& pts, int g = 2000) {
  std::vector<double> best(static_cast<std::size_t>(g), 2.0);  // min f2 per f1 column
  long long count = 0;
  for (int i = 0; i < g; ++i) {
    const double x = (i + 0.5) / g;
    double lo = 2.0;
    for (const Point& p : pts) {
      if (p.f1 <= x && p.f1 < 1.0 && p.f2 < 1.0) lo = std::min(lo, p.f2);
    }
    for (int j = 0; j < g; ++j) {
      const double y = (j + 0.5) / g;
      if (lo <= y) ++count;
    }
  }
  return static_cast<double>(count) / (static_cast<double>(g) * g);
}

inline double box(const Point& p) { return (1.0 - p.f1) * (1.0 - p.f2); }

inline Point join(const Point& a, const Point& b) { return {std::max(a.f1, b.f1), std::max(a.f2, b.f2)}; }

// Union of three boxes anchored at (1,1) via inclusion-exclusion.
inline double inclusion_exclusion(const Point& a, const Point& b, const Point& c) {
  return box(a) + box(b) + box(c) - box(join(a, b)) - box(join(a, c)) - box(join(b, c)) +
         box(join(join(a, b), c));
}

// k-NN by sorting every candidate; majority vote, then smaller summed
// distance, then smaller label.
inline int knn(const std::vector<std::vector<double>>& train, const std::vector<int>& labels,
               const std::vector<double>& q, std::size_t k, long exclude = -1) {
  std::vector<std::pair<double, std::size_t>> all;
  for (std::size_t r = 0; r < train.size(); ++r) {
    if (static_cast<long>(r) == exclude) continue;
    double s = 0.0;
    for (std::size_t c = 0; c < q.size(); ++c) s += (q[c] - train[r][c]) * (q[c] - train[r][c]);
    all.emplace_back(s, r);
  }
  std::sort(all.begin(), all.end());
  all.resize(std::min(k, all.size()));
  std::map<int, std::pair<std::size_t, double>> t;
  for (const auto& [s, r] : all) {
    t[labels[r]].first += 1;
    t[labels[r]].second += std::sqrt(s);
  }
  int best = t.begin()->first;
  auto bv = t.begin()->second;
  for (const auto& [label, v] : t) {
    if (v.first > bv.first || (v.first == bv.first && v.second < bv.second)) {
      best = label;
      bv = v;
    }
  }
  return best;
}

inline std::size_t popcount_bits(const std::vector<bool>& bits) {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true));
}

// Upper 1% point of chi-square with 99 degrees of freedom.
inline constexpr double kChiSquare99At01 = 134.642;

}  // namespace oracle
