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

#include "dnsga/dnsga.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "dnsga/dataset.hpp"
#include "dnsga/error.hpp"
#include "dnsga/experiment.hpp"
#include "dnsga/metrics.hpp"
#include "dnsga/optimizer.hpp"

struct dnsga_dataset {
  dnsga::Dataset value;
};

struct dnsga_run {
  dnsga::RunResult value;
};

struct dnsga_config {
  dnsga::ExperimentConfig value;
};

namespace {

thread_local std::string g_last_error;

dnsga_status fail(dnsga_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Maps the active exception onto a status code.
dnsga_status translate() {
  try {
    throw;
  } catch (const dnsga::Error& e) {
    return fail(static_cast<dnsga_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DNSGA_ERR_INTERNAL, "out of memory");
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(DNSGA_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(DNSGA_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DNSGA_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
dnsga_status guarded(F&& body) {
  try {
    body();
    return DNSGA_OK;
  } catch (...) {
    return translate();
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw dnsga::InvalidArgument(std::string(what) + " must not be NULL");
}

}  // namespace

extern "C" {

const char* dnsga_version(void) { return "1.0.0"; }

const char* dnsga_last_error(void) { return g_last_error.c_str(); }

void dnsga_string_free(char* s) { std::free(s); }

dnsga_status dnsga_dataset_load(const char* path, dnsga_dataset** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto ds = std::make_unique<dnsga_dataset>();
    ds->value = dnsga::load_dataset(path);
    dnsga::validate(ds->value);
    *out = ds.release();
  });
}

dnsga_status dnsga_dataset_make_toy(size_t samples, size_t features, size_t classes, size_t informative,
                                    uint64_t seed, dnsga_dataset** out) {
  return guarded([&] {
    require(out, "out");
    dnsga::ToySpec spec;
    spec.samples = samples;
    spec.features = features;
    spec.classes = classes;
    spec.informative = informative;
    auto ds = std::make_unique<dnsga_dataset>();
    ds->value = dnsga::make_toy_dataset(spec, seed);
    *out = ds.release();
  });
}

dnsga_status dnsga_dataset_save(const dnsga_dataset* ds, const char* path) {
  return guarded([&] {
    require(ds, "dataset");
    require(path, "path");
    dnsga::write_dataset(ds->value, path);
  });
}

void dnsga_dataset_free(dnsga_dataset* ds) { delete ds; }

size_t dnsga_dataset_samples(const dnsga_dataset* ds) { return ds ? ds->value.n_samples : 0; }
size_t dnsga_dataset_features(const dnsga_dataset* ds) { return ds ? ds->value.n_features : 0; }
size_t dnsga_dataset_classes(const dnsga_dataset* ds) { return ds ? ds->value.n_classes() : 0; }

dnsga_status dnsga_convert(const char* matrix, const char* labels, const char* output) {
  return guarded([&] {
    require(matrix, "matrix");
    require(output, "output");
    dnsga::convert_matrix(matrix, labels ? std::filesystem::path(labels) : std::filesystem::path(), output);
  });
}

dnsga_status dnsga_run_optimizer(const dnsga_dataset* ds, const char* variant, uint64_t seed,
                                 size_t population_size, size_t max_nfc, double test_fraction, dnsga_run** out) {
  return guarded([&] {
    require(ds, "dataset");
    require(variant, "variant");
    require(out, "out");
    const auto split = dnsga::split_dataset(ds->value, dnsga::split_seed(seed), test_fraction);
    auto config = dnsga::make_config(dnsga::parse_variant(variant), dnsga::optimizer_seed(seed));
    config.population_size = population_size;
    config.max_nfc = max_nfc;
    auto run = std::make_unique<dnsga_run>();
    run->value = dnsga::run(config, ds->value, split);
    *out = run.release();
  });
}

void dnsga_run_free(dnsga_run* run) { delete run; }

size_t dnsga_run_total_nfc(const dnsga_run* run) { return run ? run->value.total_nfc : 0; }

size_t dnsga_run_generation_count(const dnsga_run* run) { return run ? run->value.history.size() : 0; }

dnsga_status dnsga_run_generation(const dnsga_run* run, size_t index, dnsga_generation* out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    if (index >= run->value.history.size()) throw dnsga::InvalidArgument("generation index out of range");
    const auto& g = run->value.history[index];
    *out = {g.generation,      g.nfc,         g.hv_train, g.avg_hamming, g.last_front_size,
            g.replaced_count, g.front_count, g.alpha,    g.beta};
  });
}

size_t dnsga_run_front_size(const dnsga_run* run) { return run ? run->value.front.size() : 0; }

dnsga_status dnsga_run_front_member(const dnsga_run* run, size_t index, dnsga_front_member* out) {
  return guarded([&] {
    require(run, "run");
    require(out, "out");
    if (index >= run->value.front.size()) throw dnsga::InvalidArgument("front index out of range");
    const auto& m = run->value.front[index];
    *out = {m.train.error, m.train.ratio, m.test.error, m.test.ratio, m.genome.popcount()};
  });
}

dnsga_status dnsga_run_front_genome(const dnsga_run* run, size_t index, char** hex) {
  return guarded([&] {
    require(run, "run");
    require(hex, "hex");
    if (index >= run->value.front.size()) throw dnsga::InvalidArgument("front index out of range");
    *hex = copy_string(run->value.front[index].genome.to_hex());
  });
}

dnsga_status dnsga_hypervolume_2d(const double* errors, const double* ratios, size_t n, double ref_error,
                                  double ref_ratio, double* out) {
  return guarded([&] {
    require(out, "out");
    if (n > 0) {
      require(errors, "errors");
      require(ratios, "ratios");
    }
    std::vector<dnsga::ObjectiveVector> front;
    front.reserve(n);
    for (size_t i = 0; i < n; ++i) front.push_back({errors[i], ratios[i]});
    *out = dnsga::hypervolume_2d(front, {ref_error, ref_ratio});
  });
}

dnsga_status dnsga_config_create(dnsga_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new dnsga_config();
  });
}

void dnsga_config_free(dnsga_config* cfg) { delete cfg; }

dnsga_status dnsga_config_set(dnsga_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "config");
    require(key, "key");
    require(value, "value");
    dnsga::apply_setting(cfg->value, key, value);
  });
}

dnsga_status dnsga_config_load_file(dnsga_config* cfg, const char* path) {
  return guarded([&] {
    require(cfg, "config");
    require(path, "path");
    dnsga::load_config_file(cfg->value, path);
  });
}

dnsga_status dnsga_config_get_out_dir(const dnsga_config* cfg, char** out_dir) {
  return guarded([&] {
    require(cfg, "config");
    require(out_dir, "out_dir");
    *out_dir = copy_string(cfg->value.out_dir.string());
  });
}

dnsga_status dnsga_experiment_run(const dnsga_config* cfg, size_t* runs_written, size_t* failed_datasets,
                                  char** report_text) {
  return guarded([&] {
    require(cfg, "config");
    const auto report = dnsga::run_experiment(cfg->value);
    if (runs_written) *runs_written = report.run_files.size();
    if (failed_datasets) *failed_datasets = report.failures.size();
    if (report_text) *report_text = copy_string(report.summary.text);
  });
}

dnsga_status dnsga_summarize(const char* out_dir, const char* baseline, char** report_text) {
  return guarded([&] {
    require(out_dir, "out_dir");
    const auto base = baseline ? dnsga::parse_variant(baseline) : dnsga::Variant::kNsga2;
    const auto summary = dnsga::summarize(out_dir, base);
    if (report_text) *report_text = copy_string(summary.text);
  });
}

dnsga_status dnsga_emit_curves(const char* const* run_files, size_t n_files, const char* kind, const char* output,
                               size_t* rows, dnsga_missing_callback on_missing, void* user) {
  return guarded([&] {
    require(kind, "kind");
    require(output, "output");
    if (n_files > 0) require(run_files, "run_files");
    std::vector<std::filesystem::path> files;
    for (size_t i = 0; i < n_files; ++i) {
      require(run_files[i], "run file");
      files.emplace_back(run_files[i]);
    }
    const auto result = dnsga::emit_curves(files, dnsga::parse_curve_kind(kind), output);
    if (rows) *rows = result.rows;
    if (on_missing) {
      for (const auto& p : result.missing) on_missing(p.string().c_str(), user);
    }
  });
}

dnsga_status dnsga_emit_curves_dir(const char* out_dir, const char* kind, const char* output, size_t* rows) {
  return guarded([&] {
    require(out_dir, "out_dir");
    require(kind, "kind");
    require(output, "output");
    const auto result = dnsga::emit_curves(dnsga::list_run_files(out_dir), dnsga::parse_curve_kind(kind), output);
    if (rows) *rows = result.rows;
  });
}

}  // extern "C"
