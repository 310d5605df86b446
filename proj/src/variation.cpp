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

#include "dnsga/variation.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "dnsga/error.hpp"

namespace dnsga {

std::size_t tournament_select(const Ranking& ranking, Rng& rng) {
  const std::size_t n = ranking.size();
  if (n < 2) throw InvalidArgument("tournament_select: population needs at least two members");
  const std::size_t a = rng.index(n);
  std::size_t b = rng.index(n - 1);
  if (b >= a) ++b;
  if (ranking.rank[b] < ranking.rank[a]) return b;
  if (ranking.rank[a] < ranking.rank[b]) return a;
  return ranking.crowding[b] > ranking.crowding[a] ? b : a;
}

std::pair<Genome, Genome> splice(const Genome& a, const Genome& b, std::size_t cut) {
  if (a.size() != b.size()) throw DimensionError("crossover: parent lengths differ");
  const std::size_t d = a.size();
  if (cut == 0 || cut >= d) throw InvalidArgument("crossover: cut point must lie in [1, d-1]");

  const auto wa = a.words();
  const auto wb = b.words();
  std::vector<Genome::Word> c1(wa.size());
  std::vector<Genome::Word> c2(wa.size());
  const std::size_t cut_word = cut / Genome::kWordBits;
  const std::size_t cut_bit = cut % Genome::kWordBits;
  for (std::size_t w = 0; w < wa.size(); ++w) {
    if (w < cut_word) {
      c1[w] = wa[w];
      c2[w] = wb[w];
    } else if (w > cut_word) {
      c1[w] = wb[w];
      c2[w] = wa[w];
    } else {
      const Genome::Word low = (Genome::Word{1} << cut_bit) - 1;
      c1[w] = (wa[w] & low) | (wb[w] & ~low);
      c2[w] = (wb[w] & low) | (wa[w] & ~low);
    }
  }
  return {Genome::from_words(std::move(c1), d), Genome::from_words(std::move(c2), d)};
}

std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, Rng& rng) {
  if (a.size() != b.size()) throw DimensionError("crossover: parent lengths differ");
  if (a.size() < 2) throw DimensionError("crossover: genomes need at least two bits");
  const auto cut = static_cast<std::size_t>(rng.uniform_int(1, a.size() - 1));
  return splice(a, b, cut);
}

Genome bitflip_mutation(const Genome& g, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("bitflip_mutation: probability outside [0, 1]");
  if (p == 0.0) return g;
  if (p == 1.0) return g.complement();
  Genome out = g;
  const double log_q = std::log1p(-p);
  const std::size_t d = g.size();
  // Gap to the next flipped position is Geometric(p): floor(log(U) / log(1-p)).
  std::size_t pos = 0;
  while (true) {
    const double u = 1.0 - rng.uniform01();  // (0, 1]
    const double gap = std::floor(std::log(u) / log_q);
    if (gap >= static_cast<double>(d - pos)) break;
    pos += static_cast<std::size_t>(gap);
    out.flip(pos);
    if (++pos >= d) break;
  }
  return out;
}

std::vector<Genome> eliminate_duplicates(std::vector<Genome> children, std::span<const Genome> existing) {
  std::unordered_set<Genome, GenomeHash> seen(existing.begin(), existing.end());
  std::vector<Genome> out;
  out.reserve(children.size());
  for (auto& c : children) {
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Genome> make_offspring(std::span<const Genome> population, const Ranking& ranking,
                                   std::size_t count, const VariationConfig& config, Rng& rng) {
  if (count % 2 != 0) throw InvalidArgument("make_offspring: offspring count must be even");
  std::vector<Genome> children;
  children.reserve(count);
  for (std::size_t pair = 0; pair < count / 2; ++pair) {
    const Genome& p1 = population[tournament_select(ranking, rng)];
    const Genome& p2 = population[tournament_select(ranking, rng)];
    std::pair<Genome, Genome> kids;
    if (config.crossover_prob >= 1.0 || rng.bernoulli(config.crossover_prob)) {
      kids = single_point_crossover(p1, p2, rng);
    } else {
      kids = {p1, p2};
    }
    children.push_back(bitflip_mutation(kids.first, config.mutation_prob, rng));
    children.push_back(bitflip_mutation(kids.second, config.mutation_prob, rng));
  }
  if (config.eliminate_duplicates) children = eliminate_duplicates(std::move(children), population);
  return children;
}

}  // namespace dnsga
