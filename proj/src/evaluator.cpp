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

#include "dnsga/evaluator.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "dnsga/error.hpp"

namespace dnsga {

namespace {

void min_max_scale(Matrix& train, Matrix& test) {
  for (std::size_t c = 0; c < train.cols; ++c) {
    double lo = train.data[c];
    double hi = lo;
    for (std::size_t r = 1; r < train.rows; ++r) {
      lo = std::min(lo, train.data[r * train.cols + c]);
      hi = std::max(hi, train.data[r * train.cols + c]);
    }
    const double span = hi - lo;
    auto scale = [&](Matrix& m) {
      for (std::size_t r = 0; r < m.rows; ++r) {
        double& v = m.data[r * m.cols + c];
        v = span > 0.0 ? (v - lo) / span : 0.0;
      }
    };
    scale(train);
    scale(test);
  }
}

}  // namespace

double feature_ratio(const Genome& g) {
  if (g.size() == 0) throw DimensionError("feature_ratio: zero-length genome");
  return static_cast<double>(g.popcount()) / static_cast<double>(g.size());
}

Evaluator::Evaluator(const Dataset& dataset, const Split& split, EvaluatorOptions options, std::size_t max_nfc)
    : dimension_(dataset.n_features),
      k_(options.k),
      threads_(std::max<std::size_t>(1, options.threads)),
      max_nfc_(max_nfc) {
  validate(dataset);
  if (k_ == 0) throw InvalidArgument("evaluator: k must be positive");
  if (split.train.size() < 2) throw InvalidArgument("evaluator: training partition needs at least two rows");
  if (split.test.empty()) throw InvalidArgument("evaluator: empty test partition");
  std::vector<std::size_t> all_cols(dimension_);
  std::iota(all_cols.begin(), all_cols.end(), std::size_t{0});
  train_ = gather(dataset.values, dimension_, split.train, all_cols);
  test_ = gather(dataset.values, dimension_, split.test, all_cols);
  if (options.normalize) min_max_scale(train_, test_);
  for (std::size_t i : split.train) train_labels_.push_back(dataset.labels[i]);
  for (std::size_t i : split.test) test_labels_.push_back(dataset.labels[i]);
}

double Evaluator::classification_error(const Genome& g, EvalMode mode) const {
  if (g.size() != dimension_) throw DimensionError("evaluator: genome length differs from dataset width");
  const auto cols = g.selected();
  if (cols.empty()) throw InvalidArgument("evaluator: empty feature subset");
  ++classifier_calls_;
  std::vector<std::size_t> rows(train_.rows);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  const Matrix train = gather(train_.data, dimension_, rows, cols);
  if (mode == EvalMode::kTrain) return loo_error(train, train_labels_, k_);
  rows.resize(test_.rows);
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  const Matrix test = gather(test_.data, dimension_, rows, cols);
  return holdout_error(train, train_labels_, test, test_labels_, k_);
}

ObjectiveVector Evaluator::compute(const Genome& g) const {
  if (g.size() != dimension_) throw DimensionError("evaluator: genome length differs from dataset width");
  if (g.popcount() == 0) return {1.0, 0.0};
  return {classification_error(g, EvalMode::kTrain), feature_ratio(g)};
}

ObjectiveVector Evaluator::evaluate(const Genome& g) {
  std::size_t used = nfc_.load();
  do {
    if (used >= max_nfc_) throw BudgetExhausted();
  } while (!nfc_.compare_exchange_weak(used, used + 1));
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  }
  const ObjectiveVector obj = compute(g);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(g, obj);
  return obj;
}

std::vector<ObjectiveVector> Evaluator::evaluate_batch(std::span<const Genome> genomes) {
  std::size_t used = nfc_.load();
  do {
    if (used + genomes.size() > max_nfc_) throw BudgetExhausted();
  } while (!nfc_.compare_exchange_weak(used, used + genomes.size()));

  std::vector<ObjectiveVector> out(genomes.size());
  std::vector<std::size_t> todo;
  {
    std::lock_guard lock(cache_mutex_);
    for (std::size_t i = 0; i < genomes.size(); ++i) {
      if (auto it = cache_.find(genomes[i]); it != cache_.end()) {
        out[i] = it->second;
      } else {
        todo.push_back(i);
      }
    }
  }
  const std::size_t workers = std::min(threads_, todo.size());
  if (workers <= 1) {
    for (std::size_t i : todo) out[i] = compute(genomes[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t t = next++; t < todo.size(); t = next++) {
            try {
              out[todo[t]] = compute(genomes[todo[t]]);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  std::lock_guard lock(cache_mutex_);
  for (std::size_t i : todo) cache_.emplace(genomes[i], out[i]);
  return out;
}

ObjectiveVector Evaluator::evaluate_test(const Genome& g) const {
  if (g.size() != dimension_) throw DimensionError("evaluator: genome length differs from dataset width");
  if (g.popcount() == 0) return {1.0, 0.0};
  return {classification_error(g, EvalMode::kTest), feature_ratio(g)};
}

}  // namespace dnsga
