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

#include "dnsga/optimizer.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>

#include "dnsga/error.hpp"
#include "dnsga/metrics.hpp"
#include "dnsga/random.hpp"

namespace dnsga {

namespace {

constexpr std::array<std::pair<Variant, std::string_view>, 4> kVariantNames{{
    {Variant::kNsga2, "nsga2"},
    {Variant::kNsga2Genuine, "nsga2_genuine"},
    {Variant::kDiverseNsga2, "diverse_nsga2"},
    {Variant::kNsga2Replace, "nsga2_replace"},
}};

std::vector<ObjectiveVector> objectives_of(std::span<const Individual> pop) {
  std::vector<ObjectiveVector> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.train);
  return out;
}

std::vector<Genome> genomes_of(std::span<const Individual> pop) {
  std::vector<Genome> out;
  out.reserve(pop.size());
  for (const auto& ind : pop) out.push_back(ind.genome);
  return out;
}

}  // namespace

std::string_view to_string(Variant v) {
  for (const auto& [variant, name] : kVariantNames) {
    if (variant == v) return name;
  }
  return "unknown";
}

Variant parse_variant(std::string_view name) {
  for (const auto& [variant, label] : kVariantNames) {
    if (label == name) return variant;
  }
  throw InvalidArgument("unknown variant '" + std::string(name) +
                        "' (expected nsga2, nsga2_genuine, diverse_nsga2 or nsga2_replace)");
}

OptimizerConfig make_config(Variant variant, std::uint64_t seed) {
  OptimizerConfig c;
  c.variant = variant;
  c.seed = seed;
  c.init_method = (variant == Variant::kNsga2 || variant == Variant::kNsga2Replace) ? InitMethod::kBitStringUniform
                                                                                    : InitMethod::kUniformCovering;
  c.replacement_enabled = variant == Variant::kDiverseNsga2 || variant == Variant::kNsga2Replace;
  return c;
}

void validate(const OptimizerConfig& config) {
  if (config.population_size < 4 || config.population_size % 2 != 0) {
    throw ConfigError("population size must be even and at least 4");
  }
  if (config.max_nfc < config.population_size) {
    throw ConfigError("NFC budget " + std::to_string(config.max_nfc) + " is smaller than the initial population");
  }
  const auto& v = config.variation;
  if (!(v.mutation_prob >= 0.0 && v.mutation_prob <= 1.0)) throw ConfigError("mutation probability outside [0, 1]");
  if (!(v.crossover_prob >= 0.0 && v.crossover_prob <= 1.0)) throw ConfigError("crossover probability outside [0, 1]");
}

std::pair<std::size_t, std::size_t> size_window(std::span<const Genome> population) {
  if (population.empty()) throw InvalidArgument("size_window: empty population");
  std::size_t lo = population.front().popcount();
  std::size_t hi = lo;
  for (const auto& g : population) {
    const std::size_t c = g.popcount();
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  lo = std::max<std::size_t>(lo, 1);
  hi = std::max(hi, lo);
  return {lo, hi};
}

bool replace_last_front(std::vector<Individual>& population, const Ranking& ranking,
                        std::vector<Individual> fresh) {
  if (ranking.size() != population.size()) throw DimensionError("replace_last_front: ranking does not match population");
  if (ranking.fronts.size() < 2) return false;
  Front targets = ranking.last_front();
  if (fresh.size() > targets.size()) throw DimensionError("replace_last_front: more new individuals than last-front members");
  if (fresh.size() < targets.size()) {
    std::stable_sort(targets.begin(), targets.end(), [&](std::size_t a, std::size_t b) {
      return ranking.crowding[a] < ranking.crowding[b];
    });
    targets.resize(fresh.size());
    std::sort(targets.begin(), targets.end());
  }
  for (std::size_t i = 0; i < targets.size(); ++i) population[targets[i]] = std::move(fresh[i]);
  return true;
}

RunResult run(const OptimizerConfig& config, const Dataset& dataset, const Split& split,
              const EvaluatorOptions& options, const RunObserver& observer) {
  validate(config);
  Evaluator evaluator(dataset, split, options, config.max_nfc);
  return run(config, evaluator, observer);
}

RunResult run(const OptimizerConfig& config, Evaluator& evaluator, const RunObserver& observer) {
  validate(config);
  if (evaluator.nfc() != 0) throw ConfigError("optimizer needs a fresh evaluator");
  const std::size_t n = config.population_size;
  const std::size_t d = evaluator.dimension();
  const std::size_t budget = std::min(config.max_nfc, evaluator.budget());
  if (budget < n) throw ConfigError("NFC budget is smaller than the initial population");
  if (d < 2) throw ConfigError("single-point crossover needs at least two features");
  auto remaining = [&] { return budget - evaluator.nfc(); };

  Rng rng(config.seed);
  RunResult result;
  result.config = config;

  auto& pop = result.population;
  {
    InitSpec spec{n, d, 1, d, config.init_method};
    auto genomes = initialize(spec, rng);
    const auto objs = evaluator.evaluate_batch(genomes);
    for (std::size_t i = 0; i < n; ++i) pop.push_back({std::move(genomes[i]), objs[i]});
  }
  Ranking ranking = rank_population(objectives_of(pop));

  auto record = [&](std::size_t generation, std::size_t last_front, std::size_t fronts, std::size_t replaced,
                    std::size_t alpha, std::size_t beta, std::size_t offspring) {
    GenerationRecord r;
    r.generation = generation;
    r.nfc = evaluator.nfc();
    const auto objs = objectives_of(pop);
    r.hv_train = hypervolume_2d(objs);
    r.avg_hamming = avg_pairwise_hamming(genomes_of(pop));
    r.last_front_size = last_front;
    r.front_count = fronts;
    r.replaced_count = replaced;
    r.alpha = alpha;
    r.beta = beta;
    r.offspring = offspring;
    result.history.push_back(r);
    if (observer.on_generation) observer.on_generation(r, pop);
  };
  record(0, ranking.fronts.size() < 2 ? n : ranking.last_front().size(), ranking.fronts.size(), 0, 0, 0, 0);

  std::size_t stalled = 0;
  for (std::size_t generation = 1; evaluator.nfc() < budget; ++generation) {
    const auto parents = genomes_of(pop);
    auto children = make_offspring(parents, ranking, n, config.variation, rng);
    if (children.size() > remaining()) children.resize(remaining());
    const auto child_objs = evaluator.evaluate_batch(children);
    const std::size_t offspring = children.size();

    std::vector<Individual> merged = std::move(pop);
    for (std::size_t i = 0; i < children.size(); ++i) merged.push_back({std::move(children[i]), child_objs[i]});
    const Ranking merged_ranking = rank_population(objectives_of(merged));
    pop.clear();
    for (std::size_t i : survive(merged_ranking, n)) pop.push_back(std::move(merged[i]));
    ranking = rank_population(objectives_of(pop));

    const std::size_t front_count = ranking.fronts.size();
    const std::size_t last_front = front_count < 2 ? n : ranking.last_front().size();
    std::size_t replaced = 0;
    std::size_t alpha = 0;
    std::size_t beta = 0;
    if (config.replacement_enabled && front_count >= 2 && remaining() > 0) {
      const auto current = genomes_of(pop);
      std::tie(alpha, beta) = size_window(current);
      const std::size_t count = std::min(last_front, remaining());
      std::unordered_set<Genome, GenomeHash> seen(current.begin(), current.end());
      std::vector<Genome> fresh_genomes;
      fresh_genomes.reserve(count);
      for (std::size_t i = 0; i < count; ++i) {
        Genome g = genuine_individual(d, alpha, beta, rng);
        for (std::size_t attempt = 1; attempt < config.replacement_attempts && seen.contains(g); ++attempt) {
          g = genuine_individual(d, alpha, beta, rng);
        }
        seen.insert(g);
        fresh_genomes.push_back(std::move(g));
      }
      const auto fresh_objs = evaluator.evaluate_batch(fresh_genomes);
      if (observer.on_replacement) observer.on_replacement({generation, alpha, beta, fresh_genomes});
      std::vector<Individual> fresh;
      fresh.reserve(count);
      for (std::size_t i = 0; i < count; ++i) fresh.push_back({std::move(fresh_genomes[i]), fresh_objs[i]});
      replace_last_front(pop, ranking, std::move(fresh));
      ranking = rank_population(objectives_of(pop));
      replaced = count;
    }
    record(generation, last_front, front_count, replaced, alpha, beta, offspring);

    stalled = (offspring == 0 && replaced == 0) ? stalled + 1 : 0;
    if (stalled >= config.stall_limit) break;
  }

  result.total_nfc = evaluator.nfc();
  result.rank = ranking.rank;
  for (std::size_t i : ranking.fronts.front()) {
    result.front.push_back({pop[i].genome, pop[i].train, evaluator.evaluate_test(pop[i].genome)});
  }
  return result;
}

}  // namespace dnsga
