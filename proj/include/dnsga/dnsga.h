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

/* C interface to the dnsga library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a dnsga_status; on
 * failure dnsga_last_error() describes the problem until the next failing
 * call on the same thread. Strings returned through char** are allocated by
 * the library and released with dnsga_string_free.
 */
#ifndef DNSGA_DNSGA_H_
#define DNSGA_DNSGA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DNSGA_API __declspec(dllexport)
#else
#define DNSGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dnsga_status {
  DNSGA_OK = 0,
  DNSGA_ERR_INVALID_ARGUMENT = 2,
  DNSGA_ERR_DIMENSION = 3,
  DNSGA_ERR_PARSE = 4,
  DNSGA_ERR_IO = 5,
  DNSGA_ERR_CONFIG = 6,
  DNSGA_ERR_BUDGET = 7,
  DNSGA_ERR_INTERNAL = 10
} dnsga_status;

typedef struct dnsga_dataset dnsga_dataset;
typedef struct dnsga_run dnsga_run;
typedef struct dnsga_config dnsga_config;

typedef struct dnsga_generation {
  size_t generation;
  size_t nfc;
  double hv_train;
  double avg_hamming;
  size_t last_front_size;
  size_t replaced_count;
  size_t front_count;
  size_t alpha;
  size_t beta;
} dnsga_generation;

typedef struct dnsga_front_member {
  double train_error;
  double train_ratio;
  double test_error;
  double test_ratio;
  size_t feature_count;
} dnsga_front_member;

DNSGA_API const char* dnsga_version(void);
DNSGA_API const char* dnsga_last_error(void);
DNSGA_API void dnsga_string_free(char* s);

/* Datasets. */
DNSGA_API dnsga_status dnsga_dataset_load(const char* path, dnsga_dataset** out);
DNSGA_API dnsga_status dnsga_dataset_make_toy(size_t samples, size_t features, size_t classes,
                                              size_t informative, uint64_t seed, dnsga_dataset** out);
DNSGA_API dnsga_status dnsga_dataset_save(const dnsga_dataset* ds, const char* path);
DNSGA_API void dnsga_dataset_free(dnsga_dataset* ds);
DNSGA_API size_t dnsga_dataset_samples(const dnsga_dataset* ds);
DNSGA_API size_t dnsga_dataset_features(const dnsga_dataset* ds);
DNSGA_API size_t dnsga_dataset_classes(const dnsga_dataset* ds);
/* labels may be NULL, in which case the last matrix column holds labels. */
DNSGA_API dnsga_status dnsga_convert(const char* matrix, const char* labels, const char* output);

/* One optimizer run. variant is one of nsga2, nsga2_genuine, diverse_nsga2,
 * nsga2_replace. The split and optimizer streams derive from seed exactly
 * as in an experiment sweep. */
DNSGA_API dnsga_status dnsga_run_optimizer(const dnsga_dataset* ds, const char* variant, uint64_t seed,
                                           size_t population_size, size_t max_nfc, double test_fraction,
                                           dnsga_run** out);
DNSGA_API void dnsga_run_free(dnsga_run* run);
DNSGA_API size_t dnsga_run_total_nfc(const dnsga_run* run);
DNSGA_API size_t dnsga_run_generation_count(const dnsga_run* run);
DNSGA_API dnsga_status dnsga_run_generation(const dnsga_run* run, size_t index, dnsga_generation* out);
DNSGA_API size_t dnsga_run_front_size(const dnsga_run* run);
DNSGA_API dnsga_status dnsga_run_front_member(const dnsga_run* run, size_t index, dnsga_front_member* out);
DNSGA_API dnsga_status dnsga_run_front_genome(const dnsga_run* run, size_t index, char** hex);

/* Metrics. */
DNSGA_API dnsga_status dnsga_hypervolume_2d(const double* errors, const double* ratios, size_t n,
                                            double ref_error, double ref_ratio, double* out);

/* Experiment configuration: flat key=value settings (see README). */
DNSGA_API dnsga_status dnsga_config_create(dnsga_config** out);
DNSGA_API void dnsga_config_free(dnsga_config* cfg);
DNSGA_API dnsga_status dnsga_config_set(dnsga_config* cfg, const char* key, const char* value);
DNSGA_API dnsga_status dnsga_config_load_file(dnsga_config* cfg, const char* path);
DNSGA_API dnsga_status dnsga_config_get_out_dir(const dnsga_config* cfg, char** out_dir);

/* Runs the sweep, persists run files and the report under the configured
 * output directory. Datasets that fail to load are recorded in the report
 * and counted in *failed_datasets; the call still returns DNSGA_OK if the
 * remaining work succeeded. */
DNSGA_API dnsga_status dnsga_experiment_run(const dnsga_config* cfg, size_t* runs_written,
                                            size_t* failed_datasets, char** report_text);

/* Rebuilds report.txt and table_*.csv from out_dir/runs. baseline may be
 * NULL for nsga2. */
DNSGA_API dnsga_status dnsga_summarize(const char* out_dir, const char* baseline, char** report_text);

typedef void (*dnsga_missing_callback)(const char* path, void* user);

/* kind: hv, hamming or replaced_ratio. Missing files are reported through
 * on_missing (may be NULL) and skipped. */
DNSGA_API dnsga_status dnsga_emit_curves(const char* const* run_files, size_t n_files, const char* kind,
                                         const char* output, size_t* rows, dnsga_missing_callback on_missing,
                                         void* user);
/* Same, over every run file in out_dir/runs. */
DNSGA_API dnsga_status dnsga_emit_curves_dir(const char* out_dir, const char* kind, const char* output,
                                             size_t* rows);

#ifdef __cplusplus
}
#endif

#endif /* DNSGA_DNSGA_H_ */
