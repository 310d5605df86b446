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
#include <vector>

#include "dnsga/genome.hpp"
#include "dnsga/random.hpp"

namespace dnsga {

enum class InitMethod { kBitStringUniform, kUniformCovering };

struct InitSpec {
  std::size_t population_size = 0;
  std::size_t dimension = 0;
  std::size_t min_vars = 1;
  std::size_t max_vars = 0;
  InitMethod method = InitMethod::kUniformCovering;
};

// Every bit independently true with probability 1/2. Draw order: individual
// by individual, one 64-bit draw per genome word.
std::vector<Genome> bitstring_uniform(std::size_t count, std::size_t dimension, Rng& rng);

// Uniform covering: per individual, draw a size uniformly from
// [min_vars, max_vars], then that many distinct positions uniformly without
// replacement (partial Fisher-Yates). Draw order: size, then one draw per
// selected position.
std::vector<Genome> genuine_init(std::size_t count, std::size_t dimension, std::size_t min_vars,
                                 std::size_t max_vars, Rng& rng);

// Single individual of genuine_init, same draw order.
Genome genuine_individual(std::size_t dimension, std::size_t min_vars, std::size_t max_vars, Rng& rng);

// Dispatches on spec.method; BitStringUniform ignores the size window.
std::vector<Genome> initialize(const InitSpec& spec, Rng& rng);

}  // namespace dnsga
