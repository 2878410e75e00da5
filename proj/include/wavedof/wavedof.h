// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The wavedof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the wavedof library. All objects are opaque handles owned
 * by the caller and released with the matching *_destroy function. Every
 * fallible call returns a wdof_status; on failure wdof_last_error() returns
 * a message for the calling thread. Strings returned through char** out
 * parameters are heap-allocated and must be released with wdof_string_free. */

#ifndef WAVEDOF_H
#define WAVEDOF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WAVEDOF_BUILDING_LIBRARY)
#    define WAVEDOF_API __declspec(dllexport)
#  else
#    define WAVEDOF_API __declspec(dllimport)
#  endif
#else
#  define WAVEDOF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wdof_status {
  WDOF_OK = 0,
  WDOF_ERR_NULL_ARGUMENT = 1,
  WDOF_ERR_INVALID_CONFIG = 2,
  WDOF_ERR_INVALID_ARGUMENT = 3,
  WDOF_ERR_DOMAIN = 4,
  WDOF_ERR_OVERFLOW = 5,
  WDOF_ERR_PARSE = 6,
  WDOF_ERR_INTERNAL = 7
} wdof_status;

typedef struct wdof_config wdof_config;
typedef struct wdof_report wdof_report;
typedef struct wdof_campaign wdof_campaign;

typedef struct wdof_order_dof {
  int32_t n;
  double f_crit_hz;
  double w_eff_hz;
  double dof;
} wdof_order_dof;

typedef struct wdof_trial_plan {
  uint64_t num_trials;
  uint64_t circle_samples;
  uint64_t seed;
  int32_t n_probe;
  uint64_t freq_samples;
  uint64_t num_scatterers;
} wdof_trial_plan;

WAVEDOF_API const char* wdof_version(void);
WAVEDOF_API const char* wdof_last_error(void);
WAVEDOF_API const char* wdof_status_string(wdof_status status);
WAVEDOF_API void wdof_string_free(char* s);

/* Channel configuration. Keys: f0, half_bw, radius, obs_time, wave_speed,
 * noise_var, p_max, gamma. */
WAVEDOF_API wdof_status wdof_config_create(wdof_config** out);
WAVEDOF_API wdof_status wdof_config_clone(const wdof_config* cfg, wdof_config** out);
WAVEDOF_API void wdof_config_destroy(wdof_config* cfg);
WAVEDOF_API wdof_status wdof_config_load_file(wdof_config* cfg, const char* path);
WAVEDOF_API wdof_status wdof_config_parse_text(wdof_config* cfg, const char* text);
WAVEDOF_API wdof_status wdof_config_set(wdof_config* cfg, const char* key, double value);
WAVEDOF_API wdof_status wdof_config_get(const wdof_config* cfg, const char* key, double* value);
WAVEDOF_API wdof_status wdof_config_validate(const wdof_config* cfg);
WAVEDOF_API wdof_status wdof_config_to_text(const wdof_config* cfg, char** out);

/* Analytical results. */
WAVEDOF_API wdof_status wdof_effective_time(const wdof_config* cfg, double* out);
WAVEDOF_API wdof_status wdof_snr_max(const wdof_config* cfg, double* out);
WAVEDOF_API wdof_status wdof_critical_frequency(const wdof_config* cfg, int32_t n, double* out);
WAVEDOF_API wdof_status wdof_effective_bandwidth(const wdof_config* cfg, int32_t n, double* out);
WAVEDOF_API wdof_status wdof_truncation_order(const wdof_config* cfg, int32_t* out);
/* log_value is always set; value is +inf when the bound overflows. */
WAVEDOF_API wdof_status wdof_snr_upper_bound(const wdof_config* cfg, int32_t n, double f_hz,
                                             double* log_value, double* value);

WAVEDOF_API wdof_status wdof_analyze(const wdof_config* cfg, wdof_report** out);
WAVEDOF_API void wdof_report_destroy(wdof_report* report);
WAVEDOF_API wdof_status wdof_report_summary(const wdof_report* report, int32_t* n_upper,
                                            double* t_eff, double* total_dof);
WAVEDOF_API wdof_status wdof_report_order_count(const wdof_report* report, size_t* out);
WAVEDOF_API wdof_status wdof_report_order(const wdof_report* report, size_t index,
                                          wdof_order_dof* out);
WAVEDOF_API wdof_status wdof_report_to_json(const wdof_report* report, uint64_t seed, char** out);
WAVEDOF_API wdof_status wdof_report_to_csv(const wdof_report* report, uint64_t seed, char** out);
WAVEDOF_API wdof_status wdof_report_from_csv(const char* text, wdof_report** out, uint64_t* seed);

/* Parameter sweep over one of "radius", "half_bw", "gamma", "obs_time".
 * format is "csv" or "json". Nothing is produced if any point is invalid. */
WAVEDOF_API wdof_status wdof_sweep(const wdof_config* cfg, const char* axis, const double* values,
                                   size_t count, uint64_t seed, const char* format, char** out);

/* Verification campaign. */
WAVEDOF_API void wdof_trial_plan_default(wdof_trial_plan* plan);
WAVEDOF_API wdof_status wdof_simulate(const wdof_config* cfg, const wdof_trial_plan* plan,
                                      wdof_campaign** out);
WAVEDOF_API void wdof_campaign_destroy(wdof_campaign* campaign);
WAVEDOF_API wdof_status wdof_campaign_passed(const wdof_campaign* campaign, int* passed);
WAVEDOF_API wdof_status wdof_campaign_to_json(const wdof_campaign* campaign, char** out);
WAVEDOF_API wdof_status wdof_campaign_summary(const wdof_campaign* campaign, char** out);

/* Figure data: kind is "bessel" (z in [0, z_max]) or "chebyshev" (z in [-1, 1]). */
WAVEDOF_API wdof_status wdof_tables(const char* kind, const int32_t* orders, size_t count,
                                    size_t samples, double z_max, char** out);

/* Special functions. */
WAVEDOF_API wdof_status wdof_bessel_j(int32_t n, double z, double* out);
WAVEDOF_API wdof_status wdof_chebyshev_t(int32_t n, double z, double* out);
WAVEDOF_API wdof_status wdof_chebyshev_u(int32_t n, double z, double* out);

/* Random ensembles as JSON (angles, freq_grid, gains/coeffs as [re, im]).
 * n_max < 0 selects the default truncation rule. */
WAVEDOF_API wdof_status wdof_scatterers_json(const wdof_config* cfg, size_t num_scatterers,
                                             size_t num_freqs, uint64_t seed, char** out);
WAVEDOF_API wdof_status wdof_modal_spectrum_json(const wdof_config* cfg, size_t num_scatterers,
                                                 size_t num_freqs, int32_t n_max, uint64_t seed,
                                                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* WAVEDOF_H */
