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

#include "dnsga/metrics.hpp"

#include <algorithm>
#include <vector>

#include "dnsga/error.hpp"

namespace dnsga {

double hypervolume_2d(std::span<const ObjectiveVector> front, ObjectiveVector ref, std::size_t* clipped) {
  std::vector<ObjectiveVector> pts;
  pts.reserve(front.size());
  std::size_t outside = 0;
  for (const auto& p : front) {
    if (p.error > ref.error || p.ratio > ref.ratio) {
      ++outside;
    } else if (p.error < ref.error && p.ratio < ref.ratio) {
      pts.push_back(p);
    }
  }
  if (clipped != nullptr) *clipped = outside;
  std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.error < b.error || (a.error == b.error && a.ratio < b.ratio);
  });
  // Sweep in increasing error; each point that lowers the running best ratio
  // adds the strip between the two ratio levels.
  double area = 0.0;
  double level = ref.ratio;
  for (const auto& p : pts) {
    if (p.ratio < level) {
      area += (ref.error - p.error) * (level - p.ratio);
      level = p.ratio;
    }
  }
  return area;
}

double avg_pairwise_hamming(std::span<const Genome> population) {
  const std::size_t n = population.size();
  if (n < 2) throw InvalidArgument("avg_pairwise_hamming: need at least two genomes");
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) total += hamming_distance(population[i], population[j]);
  }
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(total) / pairs;
}

AccuracyPick max_accuracy(std::span<const double> errors, std::span<const std::size_t> feature_counts) {
  if (errors.empty()) throw InvalidArgument("max_accuracy: empty front");
  if (errors.size() != feature_counts.size()) throw DimensionError("max_accuracy: size mismatch");
  std::size_t best = 0;
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] < errors[best] || (errors[i] == errors[best] && feature_counts[i] < feature_counts[best])) {
      best = i;
    }
  }
  return {1.0 - errors[best], feature_counts[best], best};
}

}  // namespace dnsga
