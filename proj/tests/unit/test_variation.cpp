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

#include <cmath>
#include <limits>
#include <unordered_set>
#include <vector>

#include "dnsga/error.hpp"
#include "dnsga/genome.hpp"
#include "dnsga/pareto.hpp"
#include "dnsga/random.hpp"
#include "dnsga/variation.hpp"
#include "doctest.h"

using dnsga::Genome;
using dnsga::Rng;

namespace {

dnsga::Ranking two_member(std::size_t r0, std::size_t r1, double c0, double c1) {
  dnsga::Ranking r;
  r.rank = {r0, r1};
  r.crowding = {c0, c1};
  return r;
}

}  // namespace

TEST_CASE("tournament prefers lower rank, then larger crowding, then first drawn") {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    CHECK(dnsga::tournament_select(two_member(0, 2, 0.1, 5.0), rng) == 0);
    CHECK(dnsga::tournament_select(two_member(1, 1, kInf, 0.7), rng) == 0);
    CHECK(dnsga::tournament_select(two_member(1, 1, 0.7, kInf), rng) == 1);
  }
  dnsga::Ranking flat;
  flat.rank.assign(10, 0);
  flat.crowding.assign(10, 1.0);
  for (int i = 0; i < 50; ++i) {
    Rng probe = rng;
    const std::size_t first = probe.index(10);
    CHECK(dnsga::tournament_select(flat, rng) == first);
  }
  dnsga::Ranking lone;
  lone.rank = {0};
  lone.crowding = {1.0};
  CHECK_THROWS_AS(dnsga::tournament_select(lone, rng), dnsga::InvalidArgument);
}

TEST_CASE("single point crossover splices at the cut") {
  const auto [c1, c2] = dnsga::splice(Genome::from_bitstring("0000"), Genome::from_bitstring("1111"), 2);
  CHECK(c1.to_bitstring() == "0011");
  CHECK(c2.to_bitstring() == "1100");
  Rng rng(2);
  const Genome a = Genome::from_bitstring("1011001");
  for (int i = 0; i < 20; ++i) {
    const auto [x, y] = dnsga::single_point_crossover(a, a, rng);
    CHECK(x == a);
    CHECK(y == a);
  }
  CHECK_THROWS_AS(dnsga::single_point_crossover(Genome(1), Genome(1), rng), dnsga::DimensionError);
  CHECK_THROWS_AS(dnsga::single_point_crossover(Genome(3), Genome(4), rng), dnsga::DimensionError);
}

TEST_CASE("word-wise splice matches per-bit splice across word boundaries") {
  Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = 2 + rng.index(200);
    Genome a(d), b(d);
    for (std::size_t i = 0; i < d; ++i) {
      a.set(i, rng.bernoulli(0.5));
      b.set(i, rng.bernoulli(0.5));
    }
    const std::size_t cut = 1 + rng.index(d - 1);
    const auto [c1, c2] = dnsga::splice(a, b, cut);
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(c1.test(i) == (i < cut ? a.test(i) : b.test(i)));
      CHECK(c2.test(i) == (i < cut ? b.test(i) : a.test(i)));
    }
    CHECK(c1.popcount() + c2.popcount() == a.popcount() + b.popcount());
  }
}

TEST_CASE("bit-flip mutation") {
  Rng rng(3);
  const Genome g = Genome::from_bitstring("1100101");
  CHECK(dnsga::bitflip_mutation(g, 0.0, rng) == g);
  CHECK(dnsga::bitflip_mutation(g, 1.0, rng) == g.complement());
  CHECK_THROWS_AS(dnsga::bitflip_mutation(g, 1.5, rng), dnsga::InvalidArgument);

  // Binomial(10000, 0.01): mean 100, sd ~9.95 per genome.
  const Genome zero(10000);
  double total = 0.0, sq = 0.0;
  const int trials = 400;
  for (int i = 0; i < trials; ++i) {
    const double flips = static_cast<double>(dnsga::bitflip_mutation(zero, 0.01, rng).popcount());
    total += flips;
    sq += flips * flips;
  }
  const double mean = total / trials;
  const double sd = std::sqrt((sq - trials * mean * mean) / (trials - 1));
  CHECK(std::abs(mean - 100.0) <= 10.0);
  CHECK(std::abs(sd - 9.95) <= 1.5);
}

TEST_CASE("mutation flips each position with equal probability") {
  Rng rng(12);
  const std::size_t d = 50;
  std::vector<int> hits(d, 0);
  for (int i = 0; i < 20000; ++i) {
    const Genome m = dnsga::bitflip_mutation(Genome(d), 0.1, rng);
    for (std::size_t j = 0; j < d; ++j) hits[j] += m.test(j);
  }
  // Binomial(20000, 0.1) per position: sd ~42.4, 5 sd band.
  for (int h : hits) CHECK(std::abs(h - 2000) < 212);
}

TEST_CASE("duplicate elimination") {
  const Genome g = Genome::from_bitstring("101");
  const Genome h = Genome::from_bitstring("011");
  const Genome k = Genome::from_bitstring("110");
  CHECK(dnsga::eliminate_duplicates({g, g}, {}) == std::vector<Genome>{g});
  const std::vector<Genome> pop{h};
  CHECK(dnsga::eliminate_duplicates({g, h}, pop) == std::vector<Genome>{g});
  CHECK(dnsga::eliminate_duplicates({g, k}, {}) == std::vector<Genome>{g, k});
}

TEST_CASE("offspring are unique and absent from the parents") {
  Rng rng(21);
  std::vector<Genome> pop;
  std::vector<dnsga::ObjectiveVector> objs;
  for (int i = 0; i < 20; ++i) {
    Genome g(30);
    for (std::size_t j = 0; j < 30; ++j) g.set(j, rng.bernoulli(0.5));
    pop.push_back(g);
    objs.push_back({rng.uniform01(), rng.uniform01()});
  }
  const auto ranking = dnsga::rank_population(objs);
  const auto kids = dnsga::make_offspring(pop, ranking, 20, {}, rng);
  CHECK(kids.size() <= 20);
  std::unordered_set<Genome, dnsga::GenomeHash> seen(pop.begin(), pop.end());
  for (const Genome& k : kids) CHECK(seen.insert(k).second);
  CHECK_THROWS_AS(dnsga::make_offspring(pop, ranking, 3, {}, rng), dnsga::InvalidArgument);
}
