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

#include "wavedof/tables.hpp"

#include <stdexcept>

#include "json.hpp"
#include "wavedof/dofcore.hpp"
#include "wavedof/serialize.hpp"
#include "wavedof/specfun.hpp"

namespace wavedof {

namespace {

ChannelConfig with_axis(ChannelConfig cfg, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::radius: cfg.radius = value; break;
    case SweepAxis::half_bw: cfg.half_bw = value; break;
    case SweepAxis::gamma: cfg.gamma = value; break;
    case SweepAxis::obs_time: cfg.obs_time = value; break;
  }
  return cfg;
}

void check_orders(std::span<const int> orders) {
  if (orders.empty()) throw std::invalid_argument("order list is empty");
  for (int n : orders) {
    if (n < 0 || n > specfun::kMaxBesselOrder) {
      throw std::invalid_argument("orders must be in [0, " + std::to_string(specfun::kMaxBesselOrder) + "]");
    }
  }
}

}  // namespace

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "radius") return SweepAxis::radius;
  if (name == "half_bw") return SweepAxis::half_bw;
  if (name == "gamma") return SweepAxis::gamma;
  if (name == "obs_time") return SweepAxis::obs_time;
  throw std::invalid_argument("unknown sweep axis '" + std::string(name) +
                              "' (expected radius, half_bw, gamma or obs_time)");
}

const char* to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::radius: return "radius";
    case SweepAxis::half_bw: return "half_bw";
    case SweepAxis::gamma: return "gamma";
    default: return "obs_time";
  }
}

std::vector<SweepRow> run_sweep(const ChannelConfig& base, SweepAxis axis,
                                std::span<const double> values) {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) throw ConfigError("sweep values must be strictly increasing");
  }
  // Validate every point up front so a bad value produces no partial output.
  for (double v : values) with_axis(base, axis, v).validate();
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (double v : values) {
    const DofReport r = total_dof(with_axis(base, axis, v));
    rows.push_back({v, r.n_upper, r.t_eff, r.total_dof});
  }
  return rows;
}

std::string sweep_to_csv(const ChannelConfig& base, SweepAxis axis,
                         const std::vector<SweepRow>& rows, std::uint64_t seed) {
  std::string out = std::string("# wavedof ") + version() + " sweep axis=" + to_string(axis) + "\n";
  out += "# seed=" + std::to_string(seed) + "\n";
  out += "# config";
  for (auto key : config_keys()) {
    out += " " + std::string(key) + "=" + format_exact_number(get_config_field(base, key));
  }
  out += "\n";
  out += std::string(to_string(axis)) + ",n_upper,t_eff_s,total_dof\n";
  for (const auto& r : rows) {
    out += format_csv_number(r.value) + "," + std::to_string(r.n_upper) + "," +
           format_csv_number(r.t_eff) + "," + format_csv_number(r.total_dof) + "\n";
  }
  return out;
}

std::string sweep_to_json(const ChannelConfig& base, SweepAxis axis,
                          const std::vector<SweepRow>& rows, std::uint64_t seed) {
  nlohmann::ordered_json j;
  j["tool"] = "wavedof";
  j["version"] = version();
  j["kind"] = "sweep";
  j["seed"] = seed;
  j["axis"] = to_string(axis);
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (auto key : config_keys()) cfg[std::string(key)] = get_config_field(base, key);
  j["config"] = std::move(cfg);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json e;
    e["value"] = r.value;
    e["n_upper"] = r.n_upper;
    e["t_eff_s"] = r.t_eff;
    e["total_dof"] = r.total_dof;
    arr.push_back(std::move(e));
  }
  j["rows"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string bessel_table_csv(std::span<const int> orders, std::size_t samples, double z_max) {
  check_orders(orders);
  if (samples < 2) throw std::invalid_argument("tables need at least 2 samples");
  if (!(z_max > 0.0)) throw std::invalid_argument("z_max must be > 0");
  std::string out = std::string("# wavedof ") + version() + " tables kind=bessel\nz";
  for (int n : orders) out += ",J" + std::to_string(n);
  out += "\n";
  for (std::size_t i = 0; i < samples; ++i) {
    const double z = z_max * static_cast<double>(i) / static_cast<double>(samples - 1);
    out += format_csv_number(z);
    for (int n : orders) out += "," + format_csv_number(specfun::bessel_j(n, z));
    out += "\n";
  }
  return out;
}

std::string chebyshev_table_csv(std::span<const int> orders, std::size_t samples) {
  check_orders(orders);
  if (samples < 2) throw std::invalid_argument("tables need at least 2 samples");
  std::string out = std::string("# wavedof ") + version() + " tables kind=chebyshev\nz";
  for (int n : orders) out += ",T" + std::to_string(n);
  for (int n : orders) out += ",U" + std::to_string(n);
  out += "\n";
  for (std::size_t i = 0; i < samples; ++i) {
    double z = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    if (i + 1 == samples) z = 1.0;
    out += format_csv_number(z);
    for (int n : orders) out += "," + format_csv_number(specfun::chebyshev_first_kind(n, z));
    for (int n : orders) out += "," + format_csv_number(specfun::chebyshev_second_kind(n, z));
    out += "\n";
  }
  return out;
}

}  // namespace wavedof
