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

#include <atomic>
#include <cstddef>
#include <mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "dnsga/dataset.hpp"
#include "dnsga/genome.hpp"
#include "dnsga/knn.hpp"
#include "dnsga/pareto.hpp"

namespace dnsga {

enum class EvalMode { kTrain, kTest };

struct EvaluatorOptions {
  std::size_t k = 5;
  // Min-max scale every feature with training-partition statistics.
  bool normalize = false;
  // Worker threads for evaluate_batch; 1 evaluates inline.
  std::size_t threads = 1;
};

double feature_ratio(const Genome& g);

/// Wrapper fitness for feature subsets: (k-NN error, selected-feature ratio).
///
/// Train-mode error is leave-one-out inside the training partition; test
/// mode classifies every test row from the full training partition. An
/// empty subset scores (1, 0) without touching the classifier.
///
/// Every evaluate() call consumes one unit of the NFC budget, cached or not.
/// Test-mode scoring is free.
class Evaluator {
 public:
  Evaluator(const Dataset& dataset, const Split& split, EvaluatorOptions options, std::size_t max_nfc);

  ObjectiveVector evaluate(const Genome& g);
  // Evaluates the whole batch or throws BudgetExhausted without consuming
  // anything. Results are in input order regardless of thread count.
  std::vector<ObjectiveVector> evaluate_batch(std::span<const Genome> genomes);

  double classification_error(const Genome& g, EvalMode mode) const;
  ObjectiveVector evaluate_test(const Genome& g) const;

  std::size_t nfc() const noexcept { return nfc_.load(); }
  std::size_t budget() const noexcept { return max_nfc_; }
  std::size_t remaining() const noexcept { return max_nfc_ - nfc_.load(); }
  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t classifier_calls() const noexcept { return classifier_calls_.load(); }

 private:
  ObjectiveVector compute(const Genome& g) const;

  std::size_t dimension_;
  std::size_t k_;
  std::size_t threads_;
  std::size_t max_nfc_;
  // Full-width train/test matrices, normalized if requested.
  Matrix train_;
  Matrix test_;
  std::vector<int> train_labels_;
  std::vector<int> test_labels_;
  std::atomic<std::size_t> nfc_{0};
  mutable std::atomic<std::size_t> classifier_calls_{0};
  std::mutex cache_mutex_;
  std::unordered_map<Genome, ObjectiveVector, GenomeHash> cache_;
};

}  // namespace dnsga
