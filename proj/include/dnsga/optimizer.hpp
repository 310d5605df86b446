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
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dnsga/dataset.hpp"
#include "dnsga/evaluator.hpp"
#include "dnsga/genome.hpp"
#include "dnsga/initialization.hpp"
#include "dnsga/pareto.hpp"
#include "dnsga/variation.hpp"

namespace dnsga {

// nsga2: bit-string uniform init, no replacement.
// nsga2_genuine: uniform covering init, no replacement.
// diverse_nsga2: uniform covering init, last-front replacement.
// nsga2_replace: bit-string uniform init, last-front replacement (diversity
// ablation with the baseline initializer).
enum class Variant { kNsga2, kNsga2Genuine, kDiverseNsga2, kNsga2Replace };

std::string_view to_string(Variant v);
// Throws InvalidArgument for unknown names.
Variant parse_variant(std::string_view name);

struct OptimizerConfig {
  Variant variant = Variant::kDiverseNsga2;
  std::size_t population_size = 100;
  std::size_t max_nfc = 15000;
  VariationConfig variation;
  InitMethod init_method = InitMethod::kUniformCovering;
  bool replacement_enabled = true;
  std::uint64_t seed = 0;
  // Redraws allowed for a replacement that duplicates an existing genome.
  std::size_t replacement_attempts = 10;
  // Consecutive generations without any new evaluation before giving up.
  std::size_t stall_limit = 1000;
};

OptimizerConfig make_config(Variant variant, std::uint64_t seed);

// Throws ConfigError unless population is even and >= 4, the budget covers
// the initial population, and the probabilities are in range.
void validate(const OptimizerConfig& config);

struct Individual {
  Genome genome;
  ObjectiveVector train;
};

struct GenerationRecord {
  std::size_t generation = 0;
  std::size_t nfc = 0;
  double hv_train = 0.0;
  double avg_hamming = 0.0;
  // Size of the worst front after survival; the whole population when it
  // forms a single front.
  std::size_t last_front_size = 0;
  std::size_t replaced_count = 0;
  std::size_t front_count = 0;
  // Replacement size window, 0/0 when no replacement was attempted.
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t offspring = 0;
};

struct FrontMember {
  Genome genome;
  ObjectiveVector train;
  ObjectiveVector test;
};

struct RunResult {
  OptimizerConfig config;
  std::vector<Individual> population;
  std::vector<std::size_t> rank;
  // First front of the final population, in population order.
  std::vector<FrontMember> front;
  std::vector<GenerationRecord> history;
  std::size_t total_nfc = 0;
};

struct ReplacementEvent {
  std::size_t generation = 0;
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::span<const Genome> genomes;
};

struct RunObserver {
  std::function<void(const ReplacementEvent&)> on_replacement;
  std::function<void(const GenerationRecord&, std::span<const Individual>)> on_generation;
};

// Smallest and largest subset size in the population; the lower bound is
// clamped to 1 so replacements are never empty.
std::pair<std::size_t, std::size_t> size_window(std::span<const Genome> population);

// Swaps the last front of `ranking` for `fresh`, in place. With fewer fresh
// individuals than last-front members (budget truncation) the members with
// the smallest crowding distance go first. Returns false without touching
// anything when the population is a single front.
bool replace_last_front(std::vector<Individual>& population, const Ranking& ranking,
                        std::vector<Individual> fresh);

RunResult run(const OptimizerConfig& config, const Dataset& dataset, const Split& split,
              const EvaluatorOptions& options = {}, const RunObserver& observer = {});

// Same loop over a caller-owned, unused evaluator. The effective budget is
// the smaller of config.max_nfc and the evaluator's own.
RunResult run(const OptimizerConfig& config, Evaluator& evaluator, const RunObserver& observer = {});

}  // namespace dnsga
