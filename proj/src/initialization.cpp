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

#include "dnsga/initialization.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "dnsga/error.hpp"

namespace dnsga {

namespace {

void check_window(std::size_t dimension, std::size_t min_vars, std::size_t max_vars) {
  if (dimension == 0) throw InvalidArgument("genuine_init: dimension must be positive");
  if (min_vars > max_vars) {
    throw InvalidArgument("genuine_init: min_vars " + std::to_string(min_vars) + " exceeds max_vars " +
                          std::to_string(max_vars));
  }
  if (max_vars > dimension) {
    throw InvalidArgument("genuine_init: max_vars " + std::to_string(max_vars) + " exceeds dimension " +
                          std::to_string(dimension));
  }
}

Genome sample_individual(std::size_t dimension, std::size_t min_vars, std::size_t max_vars, Rng& rng,
                         std::vector<std::size_t>& scratch) {
  const auto count = static_cast<std::size_t>(rng.uniform_int(min_vars, max_vars));
  scratch.resize(dimension);
  std::iota(scratch.begin(), scratch.end(), std::size_t{0});
  Genome g(dimension);
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(i, dimension - 1));
    std::swap(scratch[i], scratch[j]);
    g.set(scratch[i]);
  }
  return g;
}

}  // namespace

std::vector<Genome> bitstring_uniform(std::size_t count, std::size_t dimension, Rng& rng) {
  if (dimension == 0) throw InvalidArgument("bitstring_uniform: dimension must be positive");
  const std::size_t words = (dimension + Genome::kWordBits - 1) / Genome::kWordBits;
  std::vector<Genome> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Genome::Word> w(words);
    for (auto& word : w) word = rng.next_u64();
    out.push_back(Genome::from_words(std::move(w), dimension));
  }
  return out;
}

Genome genuine_individual(std::size_t dimension, std::size_t min_vars, std::size_t max_vars, Rng& rng) {
  check_window(dimension, min_vars, max_vars);
  std::vector<std::size_t> scratch;
  return sample_individual(dimension, min_vars, max_vars, rng, scratch);
}

std::vector<Genome> genuine_init(std::size_t count, std::size_t dimension, std::size_t min_vars,
                                 std::size_t max_vars, Rng& rng) {
  check_window(dimension, min_vars, max_vars);
  std::vector<std::size_t> scratch;
  std::vector<Genome> out;
  out.reserve(count);
  for (std::size_t n = 0; n < count; ++n) out.push_back(sample_individual(dimension, min_vars, max_vars, rng, scratch));
  return out;
}

std::vector<Genome> initialize(const InitSpec& spec, Rng& rng) {
  if (spec.population_size == 0) throw InvalidArgument("initialize: population size must be positive");
  switch (spec.method) {
    case InitMethod::kBitStringUniform:
      return bitstring_uniform(spec.population_size, spec.dimension, rng);
    case InitMethod::kUniformCovering:
      return genuine_init(spec.population_size, spec.dimension, spec.min_vars, spec.max_vars, rng);
  }
  throw InvalidArgument("initialize: unknown method");
}

}  // namespace dnsga
