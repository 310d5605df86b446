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
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace dnsga {

/// Numeric feature matrix (row-major) with class labels in [0, n_classes).
struct Dataset {
  std::string name;
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  std::vector<double> values;
  std::vector<int> labels;
  std::vector<std::string> class_names;
  std::vector<std::string> feature_names;

  std::size_t n_classes() const noexcept { return class_names.size(); }
  double at(std::size_t row, std::size_t col) const { return values[row * n_features + col]; }
  std::span<const double> row(std::size_t r) const {
    return {values.data() + r * n_features, n_features};
  }
};

// CSV contract: header line; d numeric feature columns, then a final label
// column named "class". Labels may be integers or strings. Errors name the
// offending line.
Dataset parse_dataset(std::istream& in, const std::string& name);
Dataset load_dataset(const std::filesystem::path& path);
void write_dataset(const Dataset& ds, const std::filesystem::path& path);

// Checks the structural invariants; throws InvalidArgument.
void validate(const Dataset& ds);

/// Train/test partition of sample indices; both lists ascending.
struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  std::uint64_t seed = 0;
};

// Uniformly random test subset of round(test_fraction * n) samples. With
// stratify, each class contributes round(test_fraction * class size).
Split split_dataset(const Dataset& ds, std::uint64_t seed, double test_fraction = 0.2,
                    bool stratify = false);

struct ToySpec {
  std::size_t samples = 120;
  std::size_t features = 200;
  std::size_t classes = 3;
  std::size_t informative = 5;
  double separation = 3.0;
};

// Gaussian clusters that differ only on `informative` randomly placed
// features; every other feature is N(0, 1) noise.
Dataset make_toy_dataset(const ToySpec& spec, std::uint64_t seed);

// Converts a whitespace- or comma-separated numeric matrix dump into the
// CSV contract. Without a labels file the last column holds the labels.
// Returns the converted dataset.
Dataset convert_matrix(const std::filesystem::path& matrix, const std::filesystem::path& labels,
                       const std::filesystem::path& output);

}  // namespace dnsga
