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
#include <span>
#include <utility>
#include <vector>

#include "dnsga/genome.hpp"
#include "dnsga/pareto.hpp"
#include "dnsga/random.hpp"

namespace dnsga {

struct VariationConfig {
  double mutation_prob = 0.01;  // per bit
  double crossover_prob = 1.0;
  bool eliminate_duplicates = true;
};

// Binary tournament over two distinct members: lower rank wins, then larger
// crowding distance, then the first drawn.
std::size_t tournament_select(const Ranking& ranking, Rng& rng);

// Children for an explicit cut point c in [1, d-1]:
// child1 = a[0,c) ++ b[c,d), child2 = b[0,c) ++ a[c,d).
std::pair<Genome, Genome> splice(const Genome& a, const Genome& b, std::size_t cut);

// Cut drawn uniformly from [1, d-1]. Throws DimensionError for d < 2 or
// mismatched lengths.
std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, Rng& rng);

// Flips each bit independently with probability p. Positions are visited
// by geometric skipping, one uniform draw per flip plus one terminal draw.
Genome bitflip_mutation(const Genome& g, double p, Rng& rng);

// Drops children equal to an earlier child or to any existing genome.
std::vector<Genome> eliminate_duplicates(std::vector<Genome> children, std::span<const Genome> existing);

// One generation of offspring: count/2 mating pairs (two tournaments each),
// crossover, then mutation of both children; duplicates dropped if enabled.
// `count` must be even.
std::vector<Genome> make_offspring(std::span<const Genome> population, const Ranking& ranking,
                                   std::size_t count, const VariationConfig& config, Rng& rng);

}  // namespace dnsga
