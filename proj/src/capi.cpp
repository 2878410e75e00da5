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

#include "wavedof/wavedof.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "wavedof/channel.hpp"
#include "wavedof/dofcore.hpp"
#include "wavedof/serialize.hpp"
#include "wavedof/specfun.hpp"
#include "wavedof/tables.hpp"
#include "wavedof/verify.hpp"

struct wdof_config {
  wavedof::ChannelConfig cfg;
};

struct wdof_report {
  wavedof::DofReport report;
};

struct wdof_campaign {
  wavedof::CampaignResult result;
};

namespace {

thread_local std::string g_last_error;

wdof_status fail(wdof_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
wdof_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return WDOF_OK;
  } catch (const wavedof::ConfigError& e) {
    return fail(WDOF_ERR_INVALID_CONFIG, e.what());
  } catch (const wavedof::ParseError& e) {
    return fail(WDOF_ERR_PARSE, e.what());
  } catch (const std::domain_error& e) {
    return fail(WDOF_ERR_DOMAIN, e.what());
  } catch (const std::overflow_error& e) {
    return fail(WDOF_ERR_OVERFLOW, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(WDOF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(WDOF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(WDOF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WDOF_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wdof_status null_argument() { return fail(WDOF_ERR_NULL_ARGUMENT, "required pointer argument is null"); }

wavedof::TrialPlan to_plan(const wdof_trial_plan& p) {
  wavedof::TrialPlan plan;
  plan.num_trials = static_cast<std::size_t>(p.num_trials);
  plan.circle_samples = static_cast<std::size_t>(p.circle_samples);
  plan.seed = p.seed;
  plan.n_probe = p.n_probe;
  plan.freq_samples = static_cast<std::size_t>(p.freq_samples);
  plan.num_scatterers = static_cast<std::size_t>(p.num_scatterers);
  return plan;
}

}  // namespace

extern "C" {

const char* wdof_version(void) { return wavedof::version(); }

const char* wdof_last_error(void) { return g_last_error.c_str(); }

const char* wdof_status_string(wdof_status status) {
  switch (status) {
    case WDOF_OK: return "ok";
    case WDOF_ERR_NULL_ARGUMENT: return "null argument";
    case WDOF_ERR_INVALID_CONFIG: return "invalid config";
    case WDOF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case WDOF_ERR_DOMAIN: return "domain error";
    case WDOF_ERR_OVERFLOW: return "overflow";
    case WDOF_ERR_PARSE: return "parse error";
    case WDOF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void wdof_string_free(char* s) { std::free(s); }

wdof_status wdof_config_create(wdof_config** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = new wdof_config{}; });
}

wdof_status wdof_config_clone(const wdof_config* cfg, wdof_config** out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new wdof_config{cfg->cfg}; });
}

void wdof_config_destroy(wdof_config* cfg) { delete cfg; }

wdof_status wdof_config_load_file(wdof_config* cfg, const char* path) {
  if (cfg == nullptr || path == nullptr) return null_argument();
  return guarded([&] { cfg->cfg = wavedof::load_config_file(path, cfg->cfg); });
}

wdof_status wdof_config_parse_text(wdof_config* cfg, const char* text) {
  if (cfg == nullptr || text == nullptr) return null_argument();
  return guarded([&] { cfg->cfg = wavedof::parse_config_text(text, cfg->cfg); });
}

wdof_status wdof_config_set(wdof_config* cfg, const char* key, double value) {
  if (cfg == nullptr || key == nullptr) return null_argument();
  return guarded([&] { wavedof::set_config_field(cfg->cfg, key, value); });
}

wdof_status wdof_config_get(const wdof_config* cfg, const char* key, double* value) {
  if (cfg == nullptr || key == nullptr || value == nullptr) return null_argument();
  return guarded([&] { *value = wavedof::get_config_field(cfg->cfg, key); });
}

wdof_status wdof_config_validate(const wdof_config* cfg) {
  if (cfg == nullptr) return null_argument();
  return guarded([&] { cfg->cfg.validate(); });
}

wdof_status wdof_config_to_text(const wdof_config* cfg, char** out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(wavedof::config_to_text(cfg->cfg)); });
}

wdof_status wdof_effective_time(const wdof_config* cfg, double* out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    *out = wavedof::effective_time(cfg->cfg);
  });
}

wdof_status wdof_snr_max(const wdof_config* cfg, double* out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    *out = wavedof::snr_max(cfg->cfg);
  });
}

wdof_status wdof_critical_frequency(const wdof_config* cfg, int32_t n, double* out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    *out = wavedof::critical_frequency(n, cfg->cfg);
  });
}

wdof_status wdof_effective_bandwidth(const wdof_config* cfg, int32_t n, double* out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    *out = wavedof::effective_bandwidth(n, cfg->cfg);
  });
}

wdof_status wdof_truncation_order(const wdof_config* cfg, int32_t* out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    *out = wavedof::truncation_order(cfg->cfg);
  });
}

wdof_status wdof_snr_upper_bound(const wdof_config* cfg, int32_t n, double f_hz, double* log_value,
                                 double* value) {
  if (cfg == nullptr || log_value == nullptr || value == nullptr) return null_argument();
  return guarded([&] {
    cfg->cfg.validate();
    const auto b = wavedof::snr_upper_bound(n, f_hz, cfg->cfg);
    *log_value = b.log_value;
    *value = b.value.value_or(std::numeric_limits<double>::infinity());
  });
}

wdof_status wdof_analyze(const wdof_config* cfg, wdof_report** out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = new wdof_report{wavedof::total_dof(cfg->cfg)}; });
}

void wdof_report_destroy(wdof_report* report) { delete report; }

wdof_status wdof_report_summary(const wdof_report* report, int32_t* n_upper, double* t_eff,
                                double* total_dof) {
  if (report == nullptr) return null_argument();
  if (n_upper != nullptr) *n_upper = report->report.n_upper;
  if (t_eff != nullptr) *t_eff = report->report.t_eff;
  if (total_dof != nullptr) *total_dof = report->report.total_dof;
  return WDOF_OK;
}

wdof_status wdof_report_order_count(const wdof_report* report, size_t* out) {
  if (report == nullptr || out == nullptr) return null_argument();
  *out = report->report.per_order.size();
  return WDOF_OK;
}

wdof_status wdof_report_order(const wdof_report* report, size_t index, wdof_order_dof* out) {
  if (report == nullptr || out == nullptr) return null_argument();
  if (index >= report->report.per_order.size()) {
    return fail(WDOF_ERR_INVALID_ARGUMENT, "order index out of range");
  }
  const auto& row = report->report.per_order[index];
  *out = wdof_order_dof{row.n, row.f_crit_hz, row.w_eff_hz, row.dof};
  return WDOF_OK;
}

wdof_status wdof_report_to_json(const wdof_report* report, uint64_t seed, char** out) {
  if (report == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(wavedof::report_to_json(report->report, seed)); });
}

wdof_status wdof_report_to_csv(const wdof_report* report, uint64_t seed, char** out) {
  if (report == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(wavedof::report_to_csv(report->report, seed)); });
}

wdof_status wdof_report_from_csv(const char* text, wdof_report** out, uint64_t* seed) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    auto parsed = wavedof::parse_report_csv(text);
    if (seed != nullptr) *seed = parsed.seed;
    *out = new wdof_report{std::move(parsed.report)};
  });
}

wdof_status wdof_sweep(const wdof_config* cfg, const char* axis, const double* values, size_t count,
                       uint64_t seed, const char* format, char** out) {
  if (cfg == nullptr || axis == nullptr || format == nullptr || out == nullptr ||
      (values == nullptr && count > 0)) {
    return null_argument();
  }
  return guarded([&] {
    const std::string fmt = format;
    if (fmt != "csv" && fmt != "json") throw std::invalid_argument("format must be csv or json");
    const auto ax = wavedof::parse_sweep_axis(axis);
    const auto rows = wavedof::run_sweep(cfg->cfg, ax, std::span<const double>(values, count));
    *out = copy_string(fmt == "csv" ? wavedof::sweep_to_csv(cfg->cfg, ax, rows, seed)
                                    : wavedof::sweep_to_json(cfg->cfg, ax, rows, seed));
  });
}

void wdof_trial_plan_default(wdof_trial_plan* plan) {
  if (plan == nullptr) return;
  const wavedof::TrialPlan d;
  plan->num_trials = d.num_trials;
  plan->circle_samples = d.circle_samples;
  plan->seed = d.seed;
  plan->n_probe = d.n_probe;
  plan->freq_samples = d.freq_samples;
  plan->num_scatterers = d.num_scatterers;
}

wdof_status wdof_simulate(const wdof_config* cfg, const wdof_trial_plan* plan, wdof_campaign** out) {
  if (cfg == nullptr || plan == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const wavedof::TrialPlan p = to_plan(*plan);
    p.validate();
    *out = new wdof_campaign{wavedof::run_campaign(cfg->cfg, p)};
  });
}

void wdof_campaign_destroy(wdof_campaign* campaign) { delete campaign; }

wdof_status wdof_campaign_passed(const wdof_campaign* campaign, int* passed) {
  if (campaign == nullptr || passed == nullptr) return null_argument();
  *passed = campaign->result.passed() ? 1 : 0;
  return WDOF_OK;
}

wdof_status wdof_campaign_to_json(const wdof_campaign* campaign, char** out) {
  if (campaign == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(wavedof::campaign_to_json(campaign->result)); });
}

wdof_status wdof_campaign_summary(const wdof_campaign* campaign, char** out) {
  if (campaign == nullptr || out == nullptr) return null_argument();
  return guarded([&] { *out = copy_string(wavedof::campaign_summary(campaign->result)); });
}

wdof_status wdof_tables(const char* kind, const int32_t* orders, size_t count, size_t samples,
                        double z_max, char** out) {
  if (kind == nullptr || out == nullptr || (orders == nullptr && count > 0)) return null_argument();
  return guarded([&] {
    const std::vector<int> ords(orders, orders + count);
    const std::string k = kind;
    if (k == "bessel") {
      *out = copy_string(wavedof::bessel_table_csv(ords, samples, z_max));
    } else if (k == "chebyshev") {
      *out = copy_string(wavedof::chebyshev_table_csv(ords, samples));
    } else {
      throw std::invalid_argument("table kind must be bessel or chebyshev");
    }
  });
}

wdof_status wdof_bessel_j(int32_t n, double z, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = wavedof::specfun::bessel_j(n, z); });
}

wdof_status wdof_chebyshev_t(int32_t n, double z, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = wavedof::specfun::chebyshev_first_kind(n, z); });
}

wdof_status wdof_chebyshev_u(int32_t n, double z, double* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] { *out = wavedof::specfun::chebyshev_second_kind(n, z); });
}

wdof_status wdof_scatterers_json(const wdof_config* cfg, size_t num_scatterers, size_t num_freqs,
                                 uint64_t seed, char** out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto s = wavedof::make_scatterers(cfg->cfg, num_scatterers, num_freqs, seed);
    *out = copy_string(wavedof::scatterers_to_json(s));
  });
}

wdof_status wdof_modal_spectrum_json(const wdof_config* cfg, size_t num_scatterers, size_t num_freqs,
                                     int32_t n_max, uint64_t seed, char** out) {
  if (cfg == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto s = wavedof::make_scatterers(cfg->cfg, num_scatterers, num_freqs, seed);
    const int order = n_max < 0 ? wavedof::required_modal_order(cfg->cfg) : n_max;
    *out = copy_string(wavedof::modal_spectrum_to_json(wavedof::modal_coefficients(s, order)));
  });
}

}  // extern "C"
