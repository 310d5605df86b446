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

#include "dnsga/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "dnsga/error.hpp"

namespace dnsga {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) noexcept {
  return a.error <= b.error && a.ratio <= b.ratio && (a.error < b.error || a.ratio < b.ratio);
}

std::vector<Front> non_dominated_sort(std::span<const ObjectiveVector> objs) {
  const std::size_t n = objs.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<std::size_t> dominator_count(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dominates(objs[i], objs[j])) {
        dominated[i].push_back(j);
        ++dominator_count[j];
      } else if (dominates(objs[j], objs[i])) {
        dominated[j].push_back(i);
        ++dominator_count[i];
      }
    }
  }

  std::vector<Front> fronts;
  Front current;
  for (std::size_t i = 0; i < n; ++i) {
    if (dominator_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    Front next;
    for (std::size_t i : current) {
      for (std::size_t j : dominated[i]) {
        if (--dominator_count[j] == 0) next.push_back(j);
      }
    }
    std::sort(next.begin(), next.end());
    fronts.push_back(std::move(current));
    current = std::move(next);
  }
  return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> front_objs) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const std::size_t n = front_objs.size();
  if (n <= 2) return std::vector<double>(n, kInf);

  std::vector<double> dist(n, 0.0);
  std::vector<std::size_t> order(n);
  for (std::size_t m = 0; m < kNumObjectives; ++m) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return front_objs[a][m] < front_objs[b][m]; });
    const double lo = front_objs[order.front()][m];
    const double hi = front_objs[order.back()][m];
    if (hi == lo) continue;
    dist[order.front()] = kInf;
    dist[order.back()] = kInf;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      dist[order[k]] += (front_objs[order[k + 1]][m] - front_objs[order[k - 1]][m]) / (hi - lo);
    }
  }
  return dist;
}

Ranking rank_population(std::span<const ObjectiveVector> objs) {
  Ranking r;
  r.fronts = non_dominated_sort(objs);
  r.rank.assign(objs.size(), 0);
  r.crowding.assign(objs.size(), 0.0);
  std::vector<ObjectiveVector> front_objs;
  for (std::size_t f = 0; f < r.fronts.size(); ++f) {
    front_objs.clear();
    for (std::size_t i : r.fronts[f]) {
      r.rank[i] = f;
      front_objs.push_back(objs[i]);
    }
    const auto cd = crowding_distance(front_objs);
    for (std::size_t k = 0; k < cd.size(); ++k) r.crowding[r.fronts[f][k]] = cd[k];
  }
  return r;
}

std::vector<std::size_t> survive(const Ranking& ranking, std::size_t count) {
  if (count > ranking.size()) throw InvalidArgument("survive: fewer individuals than survivors requested");
  std::vector<std::size_t> out;
  out.reserve(count);
  for (const Front& front : ranking.fronts) {
    if (out.size() + front.size() <= count) {
      out.insert(out.end(), front.begin(), front.end());
      if (out.size() == count) break;
      continue;
    }
    Front sorted = front;
    std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
      return ranking.crowding[a] > ranking.crowding[b];
    });
    sorted.resize(count - out.size());
    out.insert(out.end(), sorted.begin(), sorted.end());
    break;
  }
  return out;
}

std::vector<std::size_t> non_dominated_indices(std::span<const ObjectiveVector> objs) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < objs.size() && !dominated; ++j) dominated = j != i && dominates(objs[j], objs[i]);
    if (!dominated) out.push_back(i);
  }
  return out;
}

}  // namespace dnsga
