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

#include "dnsga/knn.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dnsga/error.hpp"

namespace dnsga {

namespace {

bool closer(const Neighbor& a, const Neighbor& b) noexcept {
  return a.squared < b.squared || (a.squared == b.squared && a.index < b.index);
}

std::span<const Neighbor> nearest(std::vector<Neighbor>& cand, std::size_t k) {
  const std::size_t take = std::min(k, cand.size());
  std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(take), cand.end(), closer);
  return {cand.data(), take};
}

}  // namespace

Matrix gather(std::span<const double> source, std::size_t stride, std::span<const std::size_t> row_idx,
              std::span<const std::size_t> col_idx) {
  Matrix m;
  m.rows = row_idx.size();
  m.cols = col_idx.size();
  m.data.resize(m.rows * m.cols);
  double* out = m.data.data();
  for (std::size_t r : row_idx) {
    const double* src = source.data() + r * stride;
    for (std::size_t c : col_idx) *out++ = src[c];
  }
  return m;
}

double squared_distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

int vote(std::span<const Neighbor> nearest, std::span<const int> labels) {
  if (nearest.empty()) throw InvalidArgument("knn: no neighbours to vote");
  struct Tally {
    std::size_t votes = 0;
    double distance = 0.0;
  };
  std::map<int, Tally> tally;
  for (const Neighbor& n : nearest) {
    Tally& t = tally[labels[n.index]];
    ++t.votes;
    t.distance += std::sqrt(n.squared);
  }
  auto best = tally.begin();
  for (auto it = std::next(tally.begin()); it != tally.end(); ++it) {
    if (it->second.votes > best->second.votes ||
        (it->second.votes == best->second.votes && it->second.distance < best->second.distance)) {
      best = it;
    }
  }
  return best->first;
}

int knn_predict(const Matrix& train, std::span<const int> train_labels, std::span<const double> query,
                std::size_t k, std::optional<std::size_t> exclude) {
  if (k == 0) throw InvalidArgument("knn: k must be positive");
  if (train.rows == 0) throw InvalidArgument("knn: empty training set");
  if (train.cols == 0) throw InvalidArgument("knn: no selected features");
  if (query.size() != train.cols) throw DimensionError("knn: query width differs from training width");
  std::vector<Neighbor> cand;
  cand.reserve(train.rows);
  for (std::size_t r = 0; r < train.rows; ++r) {
    if (exclude && *exclude == r) continue;
    cand.push_back({squared_distance(query, train.row(r)), r});
  }
  return vote(nearest(cand, k), train_labels);
}

double loo_error(const Matrix& train, std::span<const int> labels, std::size_t k) {
  const std::size_t n = train.rows;
  if (n < 2) throw InvalidArgument("knn: leave-one-out needs at least two rows");
  if (train.cols == 0) throw InvalidArgument("knn: no selected features");
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = train.row(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = squared_distance(ri, train.row(j));
      dist[i * n + j] = d;
      dist[j * n + i] = d;
    }
  }
  std::size_t correct = 0;
  std::vector<Neighbor> cand;
  cand.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cand.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) cand.push_back({dist[i * n + j], j});
    }
    if (vote(nearest(cand, k), labels) == labels[i]) ++correct;
  }
  return 1.0 - static_cast<double>(correct) / static_cast<double>(n);
}

double holdout_error(const Matrix& train, std::span<const int> train_labels, const Matrix& query,
                     std::span<const int> query_labels, std::size_t k) {
  if (query.rows == 0) throw InvalidArgument("knn: empty query set");
  std::size_t correct = 0;
  for (std::size_t i = 0; i < query.rows; ++i) {
    if (knn_predict(train, train_labels, query.row(i), k) == query_labels[i]) ++correct;
  }
  return 1.0 - static_cast<double>(correct) / static_cast<double>(query.rows);
}

}  // namespace dnsga
