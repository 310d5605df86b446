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

#include <algorithm>
#include <cmath>
#include <vector>

#include "dnsga/error.hpp"
#include "dnsga/metrics.hpp"
#include "dnsga/random.hpp"
#include "doctest.h"
#include "oracles.hpp"

using dnsga::Genome;
using dnsga::ObjectiveVector;

namespace {

std::vector<oracle::Point> to_points(const std::vector<ObjectiveVector>& v) {
  std::vector<oracle::Point> p;
  for (const auto& o : v) p.push_back({o.error, o.ratio});
  return p;
}

}  // namespace

TEST_CASE("hypervolume examples") {
  CHECK(dnsga::hypervolume_2d(std::vector<ObjectiveVector>{{0, 0}}) == 1.0);
  CHECK(dnsga::hypervolume_2d(std::vector<ObjectiveVector>{{0.5, 0.5}}) == 0.25);
  CHECK(dnsga::hypervolume_2d(std::vector<ObjectiveVector>{{0.2, 0.6}, {0.6, 0.2}}) == doctest::Approx(0.48));
  CHECK(dnsga::hypervolume_2d(std::vector<ObjectiveVector>{}) == 0.0);
}

TEST_CASE("points outside the reference box are clipped") {
  std::size_t clipped = 0;
  const std::vector<ObjectiveVector> f{{0.5, 0.5}, {1.2, 0.1}, {1.0, 0.0}};
  CHECK(dnsga::hypervolume_2d(f, {1, 1}, &clipped) == 0.25);
  CHECK(clipped == 1);
}

TEST_CASE("hypervolume agrees with the grid oracle") {
  dnsga::Rng rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ObjectiveVector> f(1 + rng.index(20));
    for (auto& p : f) p = {rng.uniform01(), rng.uniform01()};
    CHECK(std::abs(dnsga::hypervolume_2d(f) - oracle::grid_hv(to_points(f), 500)) < 5e-3);
  }
}

TEST_CASE("three-point hypervolume equals inclusion-exclusion") {
  dnsga::Rng rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<ObjectiveVector> f(3);
    for (auto& p : f) p = {rng.uniform01(), rng.uniform01()};
    const auto pts = to_points(f);
    CHECK(std::abs(dnsga::hypervolume_2d(f) - oracle::inclusion_exclusion(pts[0], pts[1], pts[2])) <= 1e-12);
  }
}

TEST_CASE("hypervolume is monotone and ignores dominated points") {
  dnsga::Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ObjectiveVector> f(1 + rng.index(10));
    for (auto& p : f) p = {rng.uniform01(), rng.uniform01()};
    const double before = dnsga::hypervolume_2d(f);
    auto g = f;
    g.push_back({rng.uniform01(), rng.uniform01()});
    CHECK(dnsga::hypervolume_2d(g) >= before);
    auto h = f;
    const auto& q = f[rng.index(f.size())];
    h.push_back({std::min(1.0, q.error + 0.01), std::min(1.0, q.ratio + 0.01)});
    CHECK(dnsga::hypervolume_2d(h) == before);
    std::reverse(g.begin(), g.end());
    CHECK(dnsga::hypervolume_2d(g) >= before);
  }
}

TEST_CASE("average pairwise hamming") {
  const Genome a = Genome::from_bitstring("00000");
  CHECK(dnsga::avg_pairwise_hamming(std::vector<Genome>{a, a}) == 0.0);
  CHECK(dnsga::avg_pairwise_hamming(std::vector<Genome>{a, a.complement()}) == 5.0);
  const std::vector<Genome> three{Genome::from_bitstring("000"), Genome::from_bitstring("011"),
                                  Genome::from_bitstring("101")};
  CHECK(dnsga::avg_pairwise_hamming(three) == 2.0);
  const std::vector<Genome> rev{three[2], three[0], three[1]};
  CHECK(dnsga::avg_pairwise_hamming(rev) == 2.0);
  CHECK_THROWS_AS(dnsga::avg_pairwise_hamming(std::vector<Genome>{a}), dnsga::InvalidArgument);
}

TEST_CASE("max accuracy picks the lowest error, then fewest features") {
  const std::vector<double> e{0.3, 0.1, 0.2};
  const std::vector<std::size_t> c{5, 9, 2};
  const auto pick = dnsga::max_accuracy(e, c);
  CHECK(pick.accuracy == doctest::Approx(0.9));
  CHECK(pick.index == 1);
  const std::vector<double> tie{0.1, 0.1};
  const std::vector<std::size_t> tc{40, 12};
  CHECK(dnsga::max_accuracy(tie, tc).feature_count == 12);
  const std::vector<double> one{0.4};
  const std::vector<std::size_t> oc{3};
  CHECK(dnsga::max_accuracy(one, oc).index == 0);
}
