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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dnsga/optimizer.hpp"

namespace dnsga {

/// Settings for a dataset x variant x seed sweep. Every field has a flat
/// key=value spelling (see apply_setting) shared by config files and CLI
/// flags.
struct ExperimentConfig {
  std::vector<std::filesystem::path> datasets;
  std::vector<Variant> variants{Variant::kNsga2, Variant::kNsga2Genuine, Variant::kDiverseNsga2};
  std::size_t runs = 31;
  std::uint64_t seed_base = 1;
  std::size_t population_size = 100;
  std::size_t max_nfc = 15000;
  std::size_t k = 5;
  double test_fraction = 0.2;
  double mutation_prob = 0.01;
  double crossover_prob = 1.0;
  bool stratify = false;
  bool normalize = false;
  std::size_t threads = 1;
  Variant baseline = Variant::kNsga2;
  std::filesystem::path out_dir = "results";
};

// Keys: dataset, variant (comma-separated lists), runs, seed, nfc, pop, k,
// test_fraction, mutation_prob, crossover_prob, stratify, normalize,
// threads, baseline, out. Throws ConfigError on unknown keys or bad values.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

// '#' starts a comment; blank lines are ignored.
void load_config(ExperimentConfig& config, std::istream& in);
void load_config_file(ExperimentConfig& config, const std::filesystem::path& path);

void validate(const ExperimentConfig& config);

// Seeds derived from the per-run seed (seed_base + run index). Every
// variant shares the split of a given run.
std::uint64_t split_seed(std::uint64_t run_seed);
std::uint64_t optimizer_seed(std::uint64_t run_seed);

/// Identity of a persisted run plus the header fields needed downstream.
struct RunHeader {
  std::string dataset;
  Variant variant = Variant::kNsga2;
  std::uint64_t seed = 0;
  std::size_t population_size = 0;
  std::size_t max_nfc = 0;
  std::size_t dimension = 0;
  std::size_t k = 0;
  std::vector<std::size_t> test_indices;
};

struct RunRecord {
  RunHeader header;
  std::vector<GenerationRecord> history;
  std::vector<FrontMember> front;
  std::size_t total_nfc = 0;
};

// Line-delimited JSON: one "run" header line, one "generation" line per
// record, one "front" line per final first-front member (genome as hex),
// and a closing "end" line.
void write_run_record(std::ostream& out, const RunRecord& record);
RunRecord read_run_record(std::istream& in, const std::string& source);
RunRecord read_run_file(const std::filesystem::path& path);
std::string run_file_name(const RunHeader& header);

/// Per-run scalar outcomes derived from a run record.
struct RunOutcome {
  double hv_train = 0.0;
  double hv_test = 0.0;
  double max_accuracy = 0.0;
  std::size_t features_at_max = 0;
  // Mean over generations >= 1 of replaced / population size, in percent.
  double replaced_percent = 0.0;
  std::vector<std::size_t> front_feature_counts;
};

RunOutcome outcome_of(const RunRecord& record);

struct Summary {
  std::string text;
  std::vector<std::filesystem::path> files;
};

// Renders the HV, max-accuracy, front feature-count and replaced-ratio
// tables from every run file under `out_dir`/runs, writes report.txt and
// one CSV per table into `out_dir`. A pure function of the run files.
Summary summarize(const std::filesystem::path& out_dir, Variant baseline);

struct ExperimentReport {
  std::vector<std::filesystem::path> run_files;
  std::vector<std::string> failures;
  Summary summary;
};

// Runs every dataset x variant x seed, persists each run, then summarizes.
// A dataset that fails to load is recorded and skipped.
ExperimentReport run_experiment(const ExperimentConfig& config);

enum class CurveKind { kHv, kHamming, kReplacedRatio };
CurveKind parse_curve_kind(std::string_view name);
std::string_view to_string(CurveKind kind);

struct CurveResult {
  std::size_t rows = 0;
  std::vector<std::filesystem::path> missing;
};

// Long-format CSV: dataset,variant,seed,generation,nfc,value,mean_over_seeds.
// Missing input files are reported and skipped.
CurveResult emit_curves(const std::vector<std::filesystem::path>& run_files, CurveKind kind,
                        const std::filesystem::path& output);

// Run files under `out_dir`/runs, sorted by name.
std::vector<std::filesystem::path> list_run_files(const std::filesystem::path& out_dir);

}  // namespace dnsga
