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

#include <charconv>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "wavedof/serialize.hpp"

namespace wavedof {

namespace {

using json = nlohmann::ordered_json;

json config_json(const ChannelConfig& cfg) {
  json j = json::object();
  for (auto key : config_keys()) j[std::string(key)] = get_config_field(cfg, key);
  return j;
}

json artifact_header(const char* kind, std::uint64_t seed) {
  json j;
  j["tool"] = "wavedof";
  j["version"] = version();
  j["kind"] = kind;
  j["seed"] = seed;
  return j;
}

std::string csv_config_line(const ChannelConfig& cfg) {
  std::string line = "# config";
  for (auto key : config_keys()) {
    line += " " + std::string(key) + "=" + format_exact_number(get_config_field(cfg, key));
  }
  return line + "\n";
}

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex values must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

double parse_number(std::string_view raw, const char* what) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw ParseError(std::string("report CSV: bad ") + what + " '" + std::string(raw) + "'");
  }
  return v;
}

template <typename Int>
Int parse_integer(std::string_view raw, const char* what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (ec != std::errc{} || ptr != raw.data() + raw.size()) {
    throw ParseError(std::string("report CSV: bad ") + what + " '" + std::string(raw) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// "key=value" tokens after a fixed prefix.
std::vector<std::pair<std::string_view, std::string_view>> key_values(std::string_view line,
                                                                      std::string_view prefix) {
  if (line.substr(0, prefix.size()) != prefix) {
    throw ParseError("report CSV: expected line starting with '" + std::string(prefix) + "'");
  }
  std::vector<std::pair<std::string_view, std::string_view>> out;
  for (auto tok : split(line.substr(prefix.size()), ' ')) {
    if (tok.empty()) continue;
    const auto eq = tok.find('=');
    if (eq == std::string_view::npos) throw ParseError("report CSV: malformed token '" + std::string(tok) + "'");
    out.emplace_back(tok.substr(0, eq), tok.substr(eq + 1));
  }
  return out;
}

}  // namespace

std::string report_to_json(const DofReport& report, std::uint64_t seed) {
  json j = artifact_header("dof_report", seed);
  j["config"] = config_json(report.config);
  j["n_upper"] = report.n_upper;
  j["t_eff_s"] = report.t_eff;
  j["total_dof"] = report.total_dof;
  json orders = json::array();
  for (const auto& row : report.per_order) {
    json r;
    r["n"] = row.n;
    r["f_crit_hz"] = row.f_crit_hz;
    r["w_eff_hz"] = row.w_eff_hz;
    r["dof"] = row.dof;
    orders.push_back(std::move(r));
  }
  j["orders"] = std::move(orders);
  return j.dump(2) + "\n";
}

std::string report_to_csv(const DofReport& report, std::uint64_t seed) {
  std::string out = std::string("# wavedof ") + version() + " dof_report\n";
  out += "# seed=" + std::to_string(seed) + "\n";
  out += csv_config_line(report.config);
  out += "# summary n_upper=" + std::to_string(report.n_upper) +
         " t_eff_s=" + format_csv_number(report.t_eff) +
         " total_dof=" + format_csv_number(report.total_dof) + "\n";
  out += "n,f_crit_hz,w_eff_hz,dof\n";
  for (const auto& row : report.per_order) {
    out += std::to_string(row.n) + "," + format_csv_number(row.f_crit_hz) + "," +
           format_csv_number(row.w_eff_hz) + "," + format_csv_number(row.dof) + "\n";
  }
  return out;
}

ParsedReportCsv parse_report_csv(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 5) throw ParseError("report CSV: truncated header");
  const std::string expected_banner = std::string("# wavedof ") + version() + " dof_report";
  if (lines[0] != expected_banner) throw ParseError("report CSV: unexpected banner '" + std::string(lines[0]) + "'");

  ParsedReportCsv out;
  const auto seed_kv = key_values(lines[1], "# ");
  if (seed_kv.size() != 1 || seed_kv[0].first != "seed") throw ParseError("report CSV: missing seed");
  out.seed = parse_integer<std::uint64_t>(seed_kv[0].second, "seed");

  for (const auto& [key, raw] : key_values(lines[2], "# config")) {
    set_config_field(out.report.config, key, parse_number(raw, "config value"));
  }
  for (const auto& [key, raw] : key_values(lines[3], "# summary")) {
    if (key == "n_upper") out.report.n_upper = parse_integer<int>(raw, "n_upper");
    else if (key == "t_eff_s") out.report.t_eff = parse_number(raw, "t_eff_s");
    else if (key == "total_dof") out.report.total_dof = parse_number(raw, "total_dof");
    else throw ParseError("report CSV: unknown summary key '" + std::string(key) + "'");
  }
  if (lines[4] != "n,f_crit_hz,w_eff_hz,dof") throw ParseError("report CSV: unexpected column header");
  for (std::size_t i = 5; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    if (cols.size() != 4) throw ParseError("report CSV: row " + std::to_string(i + 1) + " needs 4 columns");
    OrderDof row;
    row.n = parse_integer<int>(cols[0], "order");
    row.f_crit_hz = parse_number(cols[1], "f_crit_hz");
    row.w_eff_hz = parse_number(cols[2], "w_eff_hz");
    row.dof = parse_number(cols[3], "dof");
    out.report.per_order.push_back(row);
  }
  return out;
}

std::string scatterers_to_json(const ScattererSet& s) {
  json j;
  j["angles"] = s.angles();
  j["freq_grid"] = s.freq_grid();
  json gains = json::array();
  for (std::size_t i = 0; i < s.num_scatterers(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < s.num_freqs(); ++k) row.push_back(complex_pair(s.gain(i, k)));
    gains.push_back(std::move(row));
  }
  j["gains"] = std::move(gains);
  return j.dump() + "\n";
}

ScattererSet scatterers_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    auto angles = j.at("angles").get<std::vector<double>>();
    auto grid = j.at("freq_grid").get<std::vector<double>>();
    std::vector<cplx> gains;
    const json& rows = j.at("gains");
    if (rows.size() != angles.size()) throw ParseError("gains must have one row per angle");
    for (const auto& row : rows) {
      if (row.size() != grid.size()) throw ParseError("gain rows must match freq_grid length");
      for (const auto& z : row) gains.push_back(complex_from(z));
    }
    return ScattererSet(std::move(angles), std::move(grid), std::move(gains));
  } catch (const json::exception& e) {
    throw ParseError(std::string("scatterer JSON: ") + e.what());
  }
}

std::string modal_spectrum_to_json(const ModalSpectrum& ms) {
  json j;
  j["n_max"] = ms.n_max;
  j["freq_grid"] = ms.freq_grid;
  json coeffs = json::array();
  for (int n = -ms.n_max; n <= ms.n_max; ++n) {
    json row = json::array();
    for (std::size_t k = 0; k < ms.freq_grid.size(); ++k) row.push_back(complex_pair(ms.at(n, k)));
    coeffs.push_back(std::move(row));
  }
  j["coeffs"] = std::move(coeffs);
  return j.dump() + "\n";
}

ModalSpectrum modal_spectrum_from_json(std::string_view text) {
  const json j = parse_json(text);
  try {
    ModalSpectrum ms;
    ms.n_max = j.at("n_max").get<int>();
    if (ms.n_max < 0) throw ParseError("n_max must be >= 0");
    ms.freq_grid = j.at("freq_grid").get<std::vector<double>>();
    const json& rows = j.at("coeffs");
    if (rows.size() != ms.num_orders()) throw ParseError("coeffs must have 2 n_max + 1 rows");
    for (const auto& row : rows) {
      if (row.size() != ms.freq_grid.size()) throw ParseError("coeff rows must match freq_grid length");
      for (const auto& z : row) ms.coeffs.push_back(complex_from(z));
    }
    return ms;
  } catch (const json::exception& e) {
    throw ParseError(std::string("modal spectrum JSON: ") + e.what());
  }
}

std::string campaign_to_json(const CampaignResult& result) {
  json j = artifact_header("verification", result.plan.seed);
  j["config"] = config_json(result.config);
  json plan;
  plan["num_trials"] = result.plan.num_trials;
  plan["circle_samples"] = result.plan.circle_samples;
  plan["seed"] = result.plan.seed;
  plan["n_probe"] = result.plan.n_probe;
  plan["freq_samples"] = result.plan.freq_samples;
  plan["num_scatterers"] = result.plan.num_scatterers;
  j["plan"] = std::move(plan);
  j["passed"] = result.passed();
  json checks = json::array();
  for (const auto& c : result.checks) {
    json e;
    e["name"] = c.name;
    e["estimate"] = c.estimate;
    e["stderr"] = c.stderr_;
    e["expected"] = c.expected;
    e["verdict"] = to_string(c.verdict);
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string campaign_summary(const CampaignResult& result) {
  std::ostringstream os;
  char line[256];
  std::snprintf(line, sizeof(line), "%-32s %15s %12s %15s  %s\n", "check", "estimate", "stderr",
                "expected", "verdict");
  os << line;
  std::size_t failed = 0;
  for (const auto& c : result.checks) {
    std::snprintf(line, sizeof(line), "%-32s %15.6g %12.4g %15.6g  %s\n", c.name.c_str(), c.estimate,
                  c.stderr_, c.expected, to_string(c.verdict));
    os << line;
    if (c.verdict == Verdict::fail) ++failed;
  }
  os << result.checks.size() << " checks, " << failed << " failed\n";
  return os.str();
}

}  // namespace wavedof
