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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dnsga {

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

// Rows `row_idx` and columns `col_idx` of a row-major source with `stride`
// columns.
Matrix gather(std::span<const double> source, std::size_t stride, std::span<const std::size_t> row_idx,
              std::span<const std::size_t> col_idx);

// Squared Euclidean distance, accumulated in column order.
double squared_distance(std::span<const double> a, std::span<const double> b) noexcept;

struct Neighbor {
  double squared = 0.0;
  std::size_t index = 0;
};

// Majority vote among neighbours already ordered by (distance, index).
// Vote ties go to the label with the smaller summed Euclidean distance, then
// to the smaller label.
int vote(std::span<const Neighbor> nearest, std::span<const int> labels);

// k nearest training rows by (squared distance, row index); all rows vote
// when fewer than k are available. `exclude` removes one training row from
// consideration (leave-one-out).
int knn_predict(const Matrix& train, std::span<const int> train_labels, std::span<const double> query,
                std::size_t k, std::optional<std::size_t> exclude = std::nullopt);

// Leave-one-out error over the training rows. Pairwise distances are shared
// across rows, so this is cheaper than n calls to knn_predict.
double loo_error(const Matrix& train, std::span<const int> labels, std::size_t k);

// Error of predicting each query row from the training rows.
double holdout_error(const Matrix& train, std::span<const int> train_labels, const Matrix& query,
                     std::span<const int> query_labels, std::size_t k);

}  // namespace dnsga
