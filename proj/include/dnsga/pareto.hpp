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
#include <vector>

namespace dnsga {

/// Two minimized objectives: classification error and selected-feature ratio.
struct ObjectiveVector {
  double error = 0.0;
  double ratio = 0.0;

  double operator[](std::size_t m) const noexcept { return m == 0 ? error : ratio; }
  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

inline constexpr std::size_t kNumObjectives = 2;

using Front = std::vector<std::size_t>;

// a weakly better everywhere and strictly better somewhere.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept;

// Fast non-dominated sort (domination counts + dominated lists). Indices in
// each front are ascending.
std::vector<Front> non_dominated_sort(std::span<const ObjectiveVector> objs);

// Per-objective neighbour-gap crowding distance of one front, in input order.
// Fronts of one or two members are all +inf. A constant objective column
// contributes nothing to any member.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front_objs);

/// Fronts, per-individual rank (0 = first front) and crowding distance.
struct Ranking {
  std::vector<Front> fronts;
  std::vector<std::size_t> rank;
  std::vector<double> crowding;

  std::size_t size() const noexcept { return rank.size(); }
  const Front& last_front() const { return fronts.back(); }
};

Ranking rank_population(std::span<const ObjectiveVector> objs);

// Elitist truncation to `count` survivors: whole fronts in rank order, then
// the overflowing front by descending crowding (stable on ties). Survivors
// are returned front by front, in the order they were admitted.
std::vector<std::size_t> survive(const Ranking& ranking, std::size_t count);

// Indices of the non-dominated members, ascending.
std::vector<std::size_t> non_dominated_indices(std::span<const ObjectiveVector> objs);

}  // namespace dnsga
