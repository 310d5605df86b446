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

#include "dnsga/genome.hpp"
#include "dnsga/pareto.hpp"

namespace dnsga {

/// Area dominated by `front` inside the box bounded by `ref`. Dominated
/// points are ignored. Points not strictly better than `ref` in both
/// objectives contribute nothing; those beyond `ref` in some objective are
/// counted in `*clipped` when provided.
double hypervolume_2d(std::span<const ObjectiveVector> front, ObjectiveVector ref = {1.0, 1.0},
                      std::size_t* clipped = nullptr);

// Mean Hamming distance over all unordered pairs. Throws InvalidArgument for
// fewer than two genomes.
double avg_pairwise_hamming(std::span<const Genome> population);

struct AccuracyPick {
  double accuracy = 0.0;
  std::size_t feature_count = 0;
  std::size_t index = 0;
};

// Most accurate member (1 - error); accuracy ties go to fewer features, then
// to the earlier member.
AccuracyPick max_accuracy(std::span<const double> errors, std::span<const std::size_t> feature_counts);

}  // namespace dnsga
