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

// Experiment driver. Talks to the library through the C interface only.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnsga/dnsga.h"

namespace {

int report_failure(dnsga_status status, const std::string& context) {
  std::cerr << "dnsga: " << context << ": " << dnsga_last_error() << '\n';
  return static_cast<int>(status);
}

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { dnsga_string_free(ptr); }
};

struct RunOptions {
  std::string config_path;
  std::vector<std::string> datasets;
  std::vector<std::string> variants;
  std::optional<std::size_t> runs;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> nfc;
  std::optional<std::size_t> pop;
  std::optional<std::size_t> threads;
  std::string out;
  std::vector<std::string> settings;
};

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

int run_command(const RunOptions& opt) {
  dnsga_config* cfg = nullptr;
  if (auto st = dnsga_config_create(&cfg); st != DNSGA_OK) return report_failure(st, "config");
  std::unique_ptr<dnsga_config, decltype(&dnsga_config_free)> guard(cfg, dnsga_config_free);

  if (!opt.config_path.empty()) {
    if (auto st = dnsga_config_load_file(cfg, opt.config_path.c_str()); st != DNSGA_OK) {
      return report_failure(st, opt.config_path);
    }
  }
  // Flags override the file.
  std::vector<std::pair<std::string, std::string>> overrides;
  if (!opt.datasets.empty()) overrides.emplace_back("dataset", join(opt.datasets));
  if (!opt.variants.empty()) overrides.emplace_back("variant", join(opt.variants));
  if (opt.runs) overrides.emplace_back("runs", std::to_string(*opt.runs));
  if (opt.seed) overrides.emplace_back("seed", std::to_string(*opt.seed));
  if (opt.nfc) overrides.emplace_back("nfc", std::to_string(*opt.nfc));
  if (opt.pop) overrides.emplace_back("pop", std::to_string(*opt.pop));
  if (opt.threads) overrides.emplace_back("threads", std::to_string(*opt.threads));
  if (!opt.out.empty()) overrides.emplace_back("out", opt.out);
  for (const auto& kv : opt.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::cerr << "dnsga: --set expects key=value, got '" << kv << "'\n";
      return DNSGA_ERR_CONFIG;
    }
    overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
  }
  for (const auto& [key, value] : overrides) {
    if (auto st = dnsga_config_set(cfg, key.c_str(), value.c_str()); st != DNSGA_OK) {
      return report_failure(st, "--" + key);
    }
  }

  std::size_t written = 0;
  std::size_t failed = 0;
  OwnedString report;
  if (auto st = dnsga_experiment_run(cfg, &written, &failed, &report.ptr); st != DNSGA_OK) {
    return report_failure(st, "run");
  }
  std::cout << report.ptr;
  OwnedString out_dir;
  dnsga_config_get_out_dir(cfg, &out_dir.ptr);
  std::cerr << "dnsga: " << written << " run file(s) written under " << out_dir.ptr << "/runs\n";
  if (failed > 0) {
    std::cerr << "dnsga: " << failed << " dataset(s) failed to load; see report\n";
    return DNSGA_ERR_PARSE;
  }
  return 0;
}

void print_missing(const char* path, void*) { std::cerr << "dnsga: missing run file skipped: " << path << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary multi-objective feature selection with NSGA-II and diverse NSGA-II"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dnsga_version()));

  RunOptions run_opt;
  auto* run = app.add_subcommand("run", "Run a dataset x variant x seed sweep and write the report");
  run->add_option("--config", run_opt.config_path, "key=value configuration file")->check(CLI::ExistingFile);
  run->add_option("--dataset", run_opt.datasets, "Dataset CSV (repeatable)");
  run->add_option("--variant", run_opt.variants, "nsga2, nsga2_genuine, diverse_nsga2, nsga2_replace (repeatable)");
  run->add_option("--runs", run_opt.runs, "Runs per dataset and variant");
  run->add_option("--seed", run_opt.seed, "Seed of run 0; run i uses seed + i");
  run->add_option("--nfc", run_opt.nfc, "Function-call budget per run");
  run->add_option("--pop", run_opt.pop, "Population size");
  run->add_option("--threads", run_opt.threads, "Concurrent runs");
  run->add_option("--out", run_opt.out, "Output directory");
  run->add_option("--set", run_opt.settings, "Any other key=value setting (repeatable)");

  std::string sum_out = "results";
  std::string baseline = "nsga2";
  auto* summarize = app.add_subcommand("summarize", "Rebuild the report from persisted run files");
  summarize->add_option("--out", sum_out, "Output directory holding runs/")->capture_default_str();
  summarize->add_option("--baseline", baseline, "Variant the w/t/l verdicts compare against")->capture_default_str();

  std::string curve_dir = "results";
  std::string curve_kind = "hv";
  std::string curve_output;
  std::vector<std::string> curve_files;
  auto* curves = app.add_subcommand("curves", "Write per-generation curves as long-format CSV");
  curves->add_option("--out", curve_dir, "Output directory holding runs/")->capture_default_str();
  curves->add_option("--kind", curve_kind, "hv, hamming or replaced_ratio")->capture_default_str();
  curves->add_option("--output", curve_output, "CSV path (default <out>/curves_<kind>.csv)");
  curves->add_option("files", curve_files, "Explicit run files instead of <out>/runs");

  std::string conv_input, conv_labels, conv_output;
  auto* convert = app.add_subcommand("convert", "Convert a numeric matrix dump into the dataset CSV format");
  convert->add_option("--input", conv_input, "Whitespace or comma separated matrix")->required();
  convert->add_option("--labels", conv_labels, "Label file; default is the matrix's last column");
  convert->add_option("--output", conv_output, "Dataset CSV to write")->required();

  std::string toy_output;
  std::size_t toy_samples = 120, toy_features = 200, toy_classes = 3, toy_informative = 5;
  std::uint64_t toy_seed = 7;
  auto* toy = app.add_subcommand("toy", "Write the synthetic Gaussian-cluster dataset");
  toy->add_option("--output", toy_output, "Dataset CSV to write")->required();
  toy->add_option("--samples", toy_samples)->capture_default_str();
  toy->add_option("--features", toy_features)->capture_default_str();
  toy->add_option("--classes", toy_classes)->capture_default_str();
  toy->add_option("--informative", toy_informative)->capture_default_str();
  toy->add_option("--seed", toy_seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*run) return run_command(run_opt);

  if (*summarize) {
    OwnedString text;
    if (auto st = dnsga_summarize(sum_out.c_str(), baseline.c_str(), &text.ptr); st != DNSGA_OK) {
      return report_failure(st, "summarize");
    }
    std::cout << text.ptr;
    return 0;
  }

  if (*curves) {
    if (curve_output.empty()) curve_output = curve_dir + "/curves_" + curve_kind + ".csv";
    std::size_t rows = 0;
    dnsga_status st;
    if (curve_files.empty()) {
      st = dnsga_emit_curves_dir(curve_dir.c_str(), curve_kind.c_str(), curve_output.c_str(), &rows);
    } else {
      std::vector<const char*> ptrs;
      for (const auto& f : curve_files) ptrs.push_back(f.c_str());
      st = dnsga_emit_curves(ptrs.data(), ptrs.size(), curve_kind.c_str(), curve_output.c_str(), &rows,
                             print_missing, nullptr);
    }
    if (st != DNSGA_OK) return report_failure(st, "curves");
    std::cerr << "dnsga: " << rows << " row(s) written to " << curve_output << '\n';
    return 0;
  }

  if (*convert) {
    const char* labels = conv_labels.empty() ? nullptr : conv_labels.c_str();
    if (auto st = dnsga_convert(conv_input.c_str(), labels, conv_output.c_str()); st != DNSGA_OK) {
      return report_failure(st, "convert");
    }
    return 0;
  }

  if (*toy) {
    dnsga_dataset* ds = nullptr;
    if (auto st = dnsga_dataset_make_toy(toy_samples, toy_features, toy_classes, toy_informative, toy_seed, &ds);
        st != DNSGA_OK) {
      return report_failure(st, "toy");
    }
    std::unique_ptr<dnsga_dataset, decltype(&dnsga_dataset_free)> guard(ds, dnsga_dataset_free);
    if (auto st = dnsga_dataset_save(ds, toy_output.c_str()); st != DNSGA_OK) return report_failure(st, "toy");
    return 0;
  }
  return 0;
}
