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

// wavedof command-line front end. Talks to the library exclusively through
// the C interface in wavedof/wavedof.h.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wavedof/wavedof.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerification = 3;

const char* const kConfigKeys[] = {"f0",         "half_bw",   "radius", "obs_time",
                                   "wave_speed", "noise_var", "p_max",  "gamma"};

struct InputError {
  std::string message;
};

struct ConfigDeleter {
  void operator()(wdof_config* c) const { wdof_config_destroy(c); }
};
struct ReportDeleter {
  void operator()(wdof_report* r) const { wdof_report_destroy(r); }
};
struct CampaignDeleter {
  void operator()(wdof_campaign* c) const { wdof_campaign_destroy(c); }
};
struct StringDeleter {
  void operator()(char* s) const { wdof_string_free(s); }
};

using ConfigPtr = std::unique_ptr<wdof_config, ConfigDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(wdof_status status) {
  if (status != WDOF_OK) {
    throw InputError{std::string(wdof_status_string(status)) + ": " + wdof_last_error()};
  }
}

// Options shared by every subcommand that takes a channel configuration.
struct ConfigOptions {
  std::string config_path;
  std::map<std::string, std::optional<double>> overrides;

  void attach(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Key-value config file");
    for (const char* key : kConfigKeys) {
      cmd->add_option(std::string("--") + key, overrides[key], std::string("Override config key ") + key);
    }
  }

  ConfigPtr resolve() const {
    wdof_config* raw = nullptr;
    check(wdof_config_create(&raw));
    ConfigPtr cfg(raw);
    if (!config_path.empty()) check(wdof_config_load_file(cfg.get(), config_path.c_str()));
    for (const auto& [key, value] : overrides) {
      if (value) check(wdof_config_set(cfg.get(), key.c_str(), *value));
    }
    return cfg;
  }
};

struct OutputOptions {
  std::string out_dir;
  std::uint64_t seed = 0;
  std::string format;

  void attach(CLI::App* cmd, const std::string& default_format, std::vector<std::string> formats) {
    format = default_format;
    cmd->add_option("--out", out_dir, "Output directory");
    cmd->add_option("--seed", seed, "Seed recorded in every artifact");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  }

  bool has_dir() const { return !out_dir.empty(); }

  void write(const std::string& name, const char* body) const {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    const auto path = std::filesystem::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << body)) {
      throw InputError{"cannot write " + path.string()};
    }
  }
};

int run_analyze(const ConfigOptions& copt, const OutputOptions& out) {
  const ConfigPtr cfg = copt.resolve();
  wdof_report* raw = nullptr;
  check(wdof_analyze(cfg.get(), &raw));
  std::unique_ptr<wdof_report, ReportDeleter> report(raw);

  int32_t n_upper = 0;
  double t_eff = 0.0;
  double total = 0.0;
  check(wdof_report_summary(report.get(), &n_upper, &t_eff, &total));

  char* json = nullptr;
  check(wdof_report_to_json(report.get(), out.seed, &json));
  OwnedString json_owned(json);
  char* csv = nullptr;
  check(wdof_report_to_csv(report.get(), out.seed, &csv));
  OwnedString csv_owned(csv);

  if (out.has_dir()) {
    if (out.format != "csv") out.write("dof_report.json", json);
    if (out.format != "json") out.write("dof_report.csv", csv);
  }
  std::printf("N_u = %d\nT_eff = %.9g s\nD = %.9g\n", n_upper, t_eff, total);
  return kExitOk;
}

int run_sweep(const ConfigOptions& copt, const OutputOptions& out, const std::string& axis,
              const std::vector<double>& values) {
  const ConfigPtr cfg = copt.resolve();
  char* body = nullptr;
  check(wdof_sweep(cfg.get(), axis.c_str(), values.data(), values.size(), out.seed,
                   out.format.c_str(), &body));
  OwnedString owned(body);
  if (out.has_dir()) {
    out.write("sweep_" + axis + "." + out.format, body);
  } else {
    std::fputs(body, stdout);
  }
  return kExitOk;
}

int run_simulate(const ConfigOptions& copt, const OutputOptions& out, wdof_trial_plan plan) {
  const ConfigPtr cfg = copt.resolve();
  plan.seed = out.seed;
  wdof_campaign* raw = nullptr;
  check(wdof_simulate(cfg.get(), &plan, &raw));
  std::unique_ptr<wdof_campaign, CampaignDeleter> campaign(raw);

  char* json = nullptr;
  check(wdof_campaign_to_json(campaign.get(), &json));
  OwnedString json_owned(json);
  char* summary = nullptr;
  check(wdof_campaign_summary(campaign.get(), &summary));
  OwnedString summary_owned(summary);
  if (out.has_dir()) out.write("verification.json", json);
  std::fputs(summary, stdout);

  int passed = 0;
  check(wdof_campaign_passed(campaign.get(), &passed));
  return passed ? kExitOk : kExitVerification;
}

int run_tables(const OutputOptions& out, const std::string& kind, const std::vector<int32_t>& orders,
               std::size_t samples, double z_max) {
  char* body = nullptr;
  check(wdof_tables(kind.c_str(), orders.data(), orders.size(), samples, z_max, &body));
  OwnedString owned(body);
  if (out.has_dir()) {
    out.write("tables_" + kind + ".csv", body);
  } else {
    std::fputs(body, stdout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial degrees of freedom of wideband 2D multipath fields"};
  app.set_version_flag("--version", std::string(wdof_version()));
  app.require_subcommand(1);

  ConfigOptions analyze_cfg, sweep_cfg, simulate_cfg;
  OutputOptions analyze_out, sweep_out, simulate_out, tables_out;

  auto* analyze = app.add_subcommand("analyze", "Per-order and total degrees of freedom");
  analyze_cfg.attach(analyze);
  analyze_out.attach(analyze, "both", {"json", "csv", "both"});

  std::string axis;
  std::vector<double> values;
  auto* sweep = app.add_subcommand("sweep", "Total DoF along one parameter axis");
  sweep_cfg.attach(sweep);
  sweep_out.attach(sweep, "csv", {"json", "csv"});
  sweep->add_option("--axis", axis, "radius, half_bw, gamma or obs_time")->required();
  sweep->add_option("--values", values, "Strictly increasing axis values")->required()->delimiter(',');

  wdof_trial_plan plan;
  wdof_trial_plan_default(&plan);
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo verification campaign");
  simulate_cfg.attach(simulate);
  simulate_out.attach(simulate, "json", {"json"});
  simulate_out.seed = plan.seed;
  simulate->add_option("--trials", plan.num_trials, "Monte Carlo trials per check");
  simulate->add_option("--circle-samples", plan.circle_samples, "Sensors on the observation circle");
  simulate->add_option("--n-probe", plan.n_probe, "Highest probed spatial order");
  simulate->add_option("--freq-samples", plan.freq_samples, "Frequency nodes per SNR integral");
  simulate->add_option("--scatterers", plan.num_scatterers, "Scatterers per realization");

  std::string kind;
  std::vector<int32_t> orders{0, 1, 2, 3, 4};
  std::size_t samples = 201;
  double z_max = 20.0;
  auto* tables = app.add_subcommand("tables", "Bessel and Chebyshev curve data");
  tables_out.attach(tables, "csv", {"csv"});
  tables->add_option("--kind", kind, "bessel or chebyshev")->required();
  tables->add_option("--orders", orders, "Orders to tabulate")->delimiter(',');
  tables->add_option("--samples", samples, "Rows per table");
  tables->add_option("--z-max", z_max, "Upper argument for the Bessel table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*analyze) return run_analyze(analyze_cfg, analyze_out);
    if (*sweep) return run_sweep(sweep_cfg, sweep_out, axis, values);
    if (*simulate) return run_simulate(simulate_cfg, simulate_out, plan);
    if (*tables) return run_tables(tables_out, kind, orders, samples, z_max);
  } catch (const InputError& e) {
    std::cerr << "wavedof: " << e.message << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
