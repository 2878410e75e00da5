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

#include "doctest.h"

#include "json.hpp"
#include "wavedof/serialize.hpp"
#include "wavedof/tables.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

using namespace wavedof;

namespace {

ChannelConfig sample_config() {
  ChannelConfig cfg;
  cfg.f0 = 2.4e9;
  cfg.half_bw = 0.5e9;
  cfg.radius = 0.1;
  cfg.obs_time = 1e-7;
  cfg.wave_speed = 3e8;
  cfg.p_max = 2.0;
  cfg.gamma = 0.7;
  return cfg;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  for (auto& line : lines_of(text)) {
    if (line.rfind("#", 0) != 0) out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("serialize");

TEST_CASE("config text round trip") {
  const auto cfg = sample_config();
  const auto back = parse_config_text(config_to_text(cfg));
  for (auto key : config_keys()) CHECK(get_config_field(back, key) == get_config_field(cfg, key));
  CHECK(config_keys().size() == 8);
}

TEST_CASE("config parsing: comments, overrides and errors") {
  const auto cfg = parse_config_text("# scenario\n f0 = 3e9 \n\nradius=0.25  # metres\n");
  CHECK(cfg.f0 == 3e9);
  CHECK(cfg.radius == 0.25);
  CHECK(cfg.half_bw == ChannelConfig{}.half_bw);

  ChannelConfig base;
  base.gamma = 5.0;
  CHECK(parse_config_text("p_max = 3", base).gamma == 5.0);

  CHECK_THROWS_AS(parse_config_text("f0 3e9"), ParseError);
  CHECK_THROWS_WITH_AS(parse_config_text("colour = 3"), doctest::Contains("colour"), ParseError);
  CHECK_THROWS_AS(parse_config_text("f0 = fast"), ParseError);
  CHECK_THROWS_AS(parse_config_text("f0 = 3e9x"), ParseError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/wavedof.cfg"), ParseError);
  ChannelConfig c;
  CHECK_THROWS_AS(set_config_field(c, "nope", 1.0), ParseError);
}

TEST_CASE("config file loading") {
  const std::string path = "test_serialize_config.cfg";
  {
    std::ofstream out(path);
    out << "half_bw = 1e8\ngamma = 0.01\n";
  }
  const auto cfg = load_config_file(path);
  CHECK(cfg.half_bw == 1e8);
  CHECK(cfg.gamma == 0.01);
  std::remove(path.c_str());
}

TEST_CASE("number formatting") {
  CHECK(format_csv_number(26.0969616372477) == "26.0969616");
  CHECK(format_csv_number(0.0) == "0");
  CHECK(format_exact_number(0.1) == "0.10000000000000001");
  CHECK(std::stod(format_exact_number(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("report CSV layout and round trip") {
  const auto rep = total_dof(sample_config());
  const std::string csv = report_to_csv(rep, 17);
  const auto lines = lines_of(csv);
  REQUIRE(lines.size() == 5 + rep.per_order.size());
  CHECK(lines[0] == std::string("# wavedof ") + version() + " dof_report");
  CHECK(lines[1] == "# seed=17");
  CHECK(lines[2].rfind("# config f0=", 0) == 0);
  CHECK(lines[3].rfind("# summary n_upper=", 0) == 0);
  CHECK(lines[4] == "n,f_crit_hz,w_eff_hz,dof");

  const auto parsed = parse_report_csv(csv);
  CHECK(parsed.seed == 17);
  CHECK(parsed.report.n_upper == rep.n_upper);
  CHECK(parsed.report.per_order.size() == rep.per_order.size());
  CHECK(parsed.report.config.radius == rep.config.radius);
  CHECK(report_to_csv(parsed.report, parsed.seed) == csv);

  CHECK_THROWS_AS(parse_report_csv("garbage"), ParseError);
  std::string broken = csv;
  broken.replace(broken.find("n,f_crit_hz"), 1, "m");
  CHECK_THROWS_AS(parse_report_csv(broken), ParseError);
}

TEST_CASE("report JSON carries config, seed and version") {
  const auto rep = total_dof(sample_config());
  const auto j = nlohmann::json::parse(report_to_json(rep, 5));
  CHECK(j["seed"] == 5);
  CHECK(j["version"] == version());
  CHECK(j["config"]["gamma"].get<double>() == 0.7);
  CHECK(j["n_upper"] == rep.n_upper);
  CHECK(j["total_dof"].get<double>() == rep.total_dof);
  CHECK(j["orders"].size() == rep.per_order.size());
  CHECK(j["orders"][0]["w_eff_hz"].get<double>() == rep.per_order[0].w_eff_hz);
  CHECK(report_to_json(rep, 5) == report_to_json(total_dof(sample_config()), 5));
}

TEST_CASE("scatterer and modal spectrum JSON round trip") {
  const auto cfg = sample_config();
  const auto s = make_scatterers(cfg, 6, 4, 3);
  const auto back = scatterers_from_json(scatterers_to_json(s));
  CHECK(back == s);
  const auto ms = modal_coefficients(s, 5);
  const auto ms_back = modal_spectrum_from_json(modal_spectrum_to_json(ms));
  CHECK(ms_back.n_max == ms.n_max);
  CHECK(ms_back.freq_grid == ms.freq_grid);
  CHECK(ms_back.coeffs == ms.coeffs);

  CHECK_THROWS_AS(scatterers_from_json("{"), ParseError);
  CHECK_THROWS_AS(scatterers_from_json(R"({"angles":[0.1],"freq_grid":[1.0],"gains":[[[1,0],[2,0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(modal_spectrum_from_json(R"({"n_max":1,"freq_grid":[1.0],"coeffs":[[[1,0]]]})"),
                  ParseError);
}

TEST_CASE("sweeps") {
  const auto cfg = sample_config();
  const std::vector<double> radii{0.05, 0.1, 0.2, 0.4};
  const auto rows = run_sweep(cfg, SweepAxis::radius, radii);
  REQUIRE(rows.size() == 4);
  // N_u(R) = floor(A R - b) + 1 with b = ln(gamma / snr_max) / 2, so doubling R
  // lands within one order of 2 N_u(R) + floor(b).
  const int shift = static_cast<int>(std::floor(0.5 * std::log(cfg.gamma / snr_max(cfg))));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].total_dof >= rows[i - 1].total_dof);
    CHECK(std::abs(rows[i].n_upper - 2 * rows[i - 1].n_upper - shift) <= 1);
  }
  const auto csv_lines = lines_of(sweep_to_csv(cfg, SweepAxis::radius, rows, 3));
  CHECK(std::find(csv_lines.begin(), csv_lines.end(), "radius,n_upper,t_eff_s,total_dof") != csv_lines.end());
  const auto j = nlohmann::json::parse(sweep_to_json(cfg, SweepAxis::radius, rows, 3));
  CHECK(j["rows"].size() == 4);

  // D is affine in T with slope sum W_n
  const std::vector<double> times{0.0, 1e-6, 2e-6, 3e-6};
  const auto t_rows = run_sweep(cfg, SweepAxis::obs_time, times);
  const double slope = (t_rows[1].total_dof - t_rows[0].total_dof) / 1e-6;
  double sum_w = 0.0;
  ChannelConfig c0 = cfg;
  c0.obs_time = 0.0;
  for (const auto& row : total_dof(c0).per_order) sum_w += row.w_eff_hz;
  CHECK(slope == doctest::Approx(sum_w).epsilon(1e-9));
  CHECK(t_rows[3].total_dof - t_rows[2].total_dof == doctest::Approx(slope * 1e-6).epsilon(1e-9));

  const std::vector<double> gammas{0.01, 0.1, 1.0, 10.0};
  const auto g_rows = run_sweep(cfg, SweepAxis::gamma, gammas);
  for (std::size_t i = 1; i < g_rows.size(); ++i) CHECK(g_rows[i].total_dof <= g_rows[i - 1].total_dof);

  const std::vector<double> bad_order{0.2, 0.1};
  CHECK_THROWS_AS(run_sweep(cfg, SweepAxis::radius, bad_order), ConfigError);
  const std::vector<double> bad_point{1e8, 5e9};
  CHECK_THROWS_AS(run_sweep(cfg, SweepAxis::half_bw, bad_point), ConfigError);
  CHECK_THROWS_AS(parse_sweep_axis("colour"), std::invalid_argument);
  CHECK(parse_sweep_axis("obs_time") == SweepAxis::obs_time);
}

TEST_CASE("figure tables") {
  const std::vector<int> orders{0, 1, 2, 3, 4};
  const auto bessel = data_lines(bessel_table_csv(orders, 401, 20.0));
  REQUIRE(bessel.size() == 402);
  CHECK(bessel[0] == "z,J0,J1,J2,J3,J4");
  CHECK(bessel[1] == "0,1,0,0,0,0");

  // first local maximum of each column moves right with the order
  std::vector<std::vector<double>> cols(5);
  for (std::size_t i = 1; i < bessel.size(); ++i) {
    std::istringstream row(bessel[i]);
    std::string cell;
    std::getline(row, cell, ',');
    for (auto& col : cols) {
      std::getline(row, cell, ',');
      col.push_back(std::stod(cell));
    }
  }
  double prev_peak = -1.0;
  for (std::size_t n = 1; n < cols.size(); ++n) {
    std::size_t k = 1;
    while (k + 1 < cols[n].size() && !(cols[n][k] > cols[n][k - 1] && cols[n][k] >= cols[n][k + 1])) ++k;
    CHECK(static_cast<double>(k) > prev_peak);
    prev_peak = static_cast<double>(k);
  }

  const auto cheb = data_lines(chebyshev_table_csv(orders, 201));
  REQUIRE(cheb.size() == 202);
  CHECK(cheb[0] == "z,T0,T1,T2,T3,T4,U0,U1,U2,U3,U4");
  for (std::size_t i = 1; i < cheb.size(); ++i) {
    std::istringstream row(cheb[i]);
    std::string cell;
    std::getline(row, cell, ',');
    const double z = std::stod(cell);
    CHECK(z >= -1.0);
    CHECK(z <= 1.0);
    for (int n = 0; n < 5; ++n) {
      std::getline(row, cell, ',');
      CHECK(std::fabs(std::stod(cell)) <= 1.0 + 1e-9);
    }
  }

  const std::vector<int> negative{-1};
  CHECK_THROWS_AS(bessel_table_csv(negative, 10, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bessel_table_csv({}, 10, 1.0), std::invalid_argument);
}

TEST_CASE("campaign JSON and summary") {
  TrialPlan plan;
  plan.num_trials = 100;
  plan.freq_samples = 12;
  const auto res = run_campaign(ChannelConfig{}, plan);
  const auto j = nlohmann::json::parse(campaign_to_json(res));
  CHECK(j["seed"] == plan.seed);
  CHECK(j["checks"].size() == res.checks.size());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("estimate"));
    CHECK(c.contains("stderr"));
    CHECK(c.contains("verdict"));
  }
  CHECK(campaign_summary(res).find("checks") != std::string::npos);
}

TEST_SUITE_END();
