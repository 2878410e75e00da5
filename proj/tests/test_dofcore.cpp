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

#include "wavedof/dofcore.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace wavedof;

namespace {

// Band [1.9, 2.9] GHz, R = 0.1 m, T = 0, gamma = snr_max, c = 3e8. Reference
// numbers below come from tests/oracles/dof_worked_example.py (mpmath, 40 digits).
ChannelConfig worked() {
  ChannelConfig cfg;
  cfg.f0 = 2.4e9;
  cfg.half_bw = 0.5e9;
  cfg.radius = 0.1;
  cfg.obs_time = 0.0;
  cfg.wave_speed = 3e8;
  cfg.noise_var = 1.0;
  cfg.p_max = 1.0;
  cfg.gamma = 1.0;
  return cfg;
}

constexpr double kCrit[] = {351298989.145914964,  702597978.291829928,  1053896967.43774489,
                            1405195956.58365986,  1756494945.72957482,  2107793934.87548978,
                            2459092924.02140475,  2810391913.16731971,  3161690902.31323468};

ChannelConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ChannelConfig cfg;
  cfg.f0 = 1e8 * std::pow(100.0, u(rng));
  cfg.half_bw = cfg.f0 * (0.05 + 0.9 * u(rng));
  cfg.radius = 0.01 * std::pow(100.0, u(rng));
  cfg.obs_time = 1e-6 * u(rng);
  cfg.wave_speed = 3e8;
  cfg.noise_var = std::pow(10.0, -2.0 + 4.0 * u(rng));
  cfg.p_max = std::pow(10.0, -2.0 + 4.0 * u(rng));
  cfg.gamma = std::pow(10.0, -2.0 + 4.0 * u(rng));
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("dofcore");

TEST_CASE("effective time") {
  ChannelConfig cfg = worked();
  cfg.obs_time = 1.0;
  cfg.radius = 0.0;
  CHECK(effective_time(cfg) == 1.0);
  cfg.obs_time = 1e-3;
  cfg.radius = 300.0;
  CHECK(effective_time(cfg) == doctest::Approx(1.002e-3).epsilon(1e-14));
  CHECK(effective_time(worked()) == doctest::Approx(6.66666666666666666667e-10).epsilon(1e-14));
}

TEST_CASE("maximum SNR") {
  ChannelConfig cfg;
  cfg.p_max = 1.0;
  cfg.noise_var = 1.0;
  CHECK(snr_max(cfg) == 1.0);
  cfg.p_max = 10.0;
  cfg.noise_var = 2.0;
  CHECK(snr_max(cfg) == 5.0);
  cfg.p_max = 1e-6;
  cfg.noise_var = 1e-9;
  CHECK(snr_max(cfg) == doctest::Approx(1000.0).epsilon(1e-14));
  cfg.noise_var = 0.0;
  CHECK_THROWS_AS(snr_max(cfg), std::domain_error);
}

TEST_CASE("critical frequency") {
  const auto cfg = worked();
  for (int n = 1; n <= 9; ++n) CHECK(critical_frequency(n, cfg) == doctest::Approx(kCrit[n - 1]).epsilon(1e-14));
  ChannelConfig unit = cfg;
  unit.radius = 1.0;
  CHECK(critical_frequency(5, unit) == doctest::Approx(175649494.572957482).epsilon(1e-14));

  ChannelConfig loud = cfg;
  loud.p_max = 1e6;  // ln(gamma / snr_max) / 2 = -6.9 < -1
  CHECK(critical_frequency(1, loud) == 0.0);
  CHECK(critical_frequency_unclamped(1, loud) < 0.0);
  CHECK_THROWS_AS(critical_frequency(0, cfg), std::domain_error);
}

TEST_CASE("SNR bound") {
  const auto cfg = worked();
  const double star = 5 * cfg.wave_speed / (std::numbers::e * std::numbers::pi * cfg.radius);
  auto at_star = snr_upper_bound(5, star, cfg);
  REQUIRE(at_star.value.has_value());
  CHECK(*at_star.value == doctest::Approx(snr_max(cfg)).epsilon(1e-12));
  CHECK(*snr_upper_bound(5, 0.5 * star, cfg).value == doctest::Approx(std::exp(-5.0)).epsilon(1e-12));
  CHECK(*snr_upper_bound(3, 0.0, cfg).value == doctest::Approx(std::exp(-6.0)).epsilon(1e-14));

  const auto huge = snr_upper_bound(1, 1e30, cfg);
  CHECK_FALSE(huge.value.has_value());
  CHECK(std::isfinite(huge.log_value));
  CHECK_THROWS_AS(snr_upper_bound(0, 1e9, cfg), std::domain_error);
  CHECK_THROWS_AS(snr_upper_bound(1, -1.0, cfg), std::domain_error);
}

TEST_CASE("SNR bound chain: final bound dominates the small-argument integral") {
  // Independent quadrature of snr_max * int_0^f (pi f' R / c)^(2n) / (n!)^2 df' / f,
  // done in the log domain with composite Simpson on a dense grid.
  ChannelConfig cfg = worked();
  cfg.radius = 0.2;
  for (int n = 1; n <= 20; ++n) {
    for (double kr : {0.5, 2.0, 8.0, 15.0, 30.0}) {
      const double f = kr * cfg.wave_speed / (2.0 * std::numbers::pi * cfg.radius);
      const int steps = 2000;
      const double h = f / steps;
      const double lg = std::lgamma(n + 1.0);
      auto log_integrand = [&](double x) {
        return 2.0 * n * std::log(std::numbers::pi * x * cfg.radius / cfg.wave_speed) - 2.0 * lg;
      };
      const double log_peak = log_integrand(f);
      double acc = 0.0;
      for (int i = 1; i <= steps; ++i) {
        const double w = i == steps ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        acc += w * std::exp(log_integrand(i * h) - log_peak);
      }
      const double log_quad = log_peak + std::log(acc * h / 3.0 / f) + std::log(snr_max(cfg));
      const auto closed = snr_small_arg_bound(n, f, cfg);
      CHECK(closed.log_value == doctest::Approx(log_quad).epsilon(1e-6));
      CHECK(snr_upper_bound_with_beta(n, f, cfg).log_value >= log_quad - 1e-9);
      CHECK(snr_upper_bound(n, f, cfg).log_value >= log_quad - 1e-9);
      CHECK(snr_upper_bound(n, f, cfg).log_value >= snr_upper_bound_with_beta(n, f, cfg).log_value);
    }
  }
}

TEST_CASE("threshold consistency with the bound") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = random_config(rng);
    for (int n = 1; n <= 30; n += 3) {
      const double fc = critical_frequency_unclamped(n, cfg);
      if (fc > 0.0) {
        CHECK(snr_upper_bound(n, fc, cfg).log_value == doctest::Approx(std::log(cfg.gamma)).epsilon(1e-9));
        CHECK(*snr_upper_bound(n, fc, cfg).value == doctest::Approx(cfg.gamma).epsilon(1e-9));
        for (double frac : {0.0, 0.3, 0.8, 0.999}) {
          CHECK(*snr_upper_bound(n, frac * fc, cfg).value < cfg.gamma);
        }
      }
    }
  }
}

TEST_CASE("truncation order") {
  CHECK(truncation_order(worked()) == 9);
  ChannelConfig tiny = worked();
  tiny.radius = 1e-9;
  CHECK(truncation_order(tiny) == 1);
  ChannelConfig zero = worked();
  zero.radius = 0.0;
  CHECK(truncation_order(zero) == 1);
  zero.p_max = 1e6;  // even a huge snr_max cannot make J_n(0) = 0 detectable
  CHECK(truncation_order(zero) == 1);
  CHECK(std::isinf(critical_frequency(1, zero)));
  ChannelConfig quiet = worked();
  quiet.p_max = 0.0;
  CHECK(truncation_order(quiet) == 1);

  // scan oracle: smallest n with F_n > f0 + W
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = random_config(rng);
    const int nu = truncation_order(cfg);
    CHECK(nu >= 1);
    CHECK(critical_frequency(nu, cfg) > cfg.band_high());
    if (nu > 1) CHECK_FALSE(critical_frequency(nu - 1, cfg) > cfg.band_high());
  }
}

TEST_CASE("doubling the radius doubles the truncation order") {
  ChannelConfig cfg = worked();
  int prev = truncation_order(cfg);
  for (int k = 0; k < 6; ++k) {
    cfg.radius *= 2.0;
    const int nu = truncation_order(cfg);
    CHECK(std::abs(nu - 2 * prev) <= 1);
    prev = nu;
  }
}

TEST_CASE("effective bandwidth") {
  const auto cfg = worked();
  CHECK(effective_bandwidth(0, cfg) == 2.0 * cfg.half_bw);
  CHECK(effective_bandwidth(3, cfg) == 1e9);
  CHECK(effective_bandwidth(6, cfg) == doctest::Approx(792206065.124510215).epsilon(1e-12));
  CHECK(effective_bandwidth(7, cfg) == doctest::Approx(440907075.978595251).epsilon(1e-12));
  CHECK(effective_bandwidth(8, cfg) == doctest::Approx(89608086.8326802869).epsilon(1e-10));
  CHECK(effective_bandwidth(9, cfg) == 0.0);
  CHECK(effective_bandwidth(-100, cfg) == 0.0);
  for (int n = 1; n < 20; ++n) {
    CHECK(effective_bandwidth(-n, cfg) == effective_bandwidth(n, cfg));
    CHECK(effective_bandwidth(n, cfg) <= effective_bandwidth(n - 1, cfg));
  }
}

TEST_CASE("total DoF of the worked configuration") {
  const auto rep = total_dof(worked());
  CHECK(rep.n_upper == 9);
  REQUIRE(rep.per_order.size() == 17);
  CHECK(rep.per_order.front().n == -8);
  CHECK(rep.per_order.back().n == 8);
  CHECK(rep.t_eff == doctest::Approx(6.66666666666666666667e-10).epsilon(1e-14));
  CHECK(rep.total_dof == doctest::Approx(26.0969616372477143373726322309).epsilon(1e-12));
  double sum_w = 0.0, sum_d = 0.0;
  for (const auto& row : rep.per_order) {
    sum_w += row.w_eff_hz;
    sum_d += row.dof;
    CHECK(row.w_eff_hz == effective_bandwidth(row.n, worked()));
  }
  CHECK(sum_w == doctest::Approx(13645442455.8715715060589483464).epsilon(1e-12));
  CHECK(rep.total_dof == sum_d);
}

TEST_CASE("report invariants on random configurations") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = random_config(rng);
    const auto rep = total_dof(cfg);
    CHECK(rep.t_eff >= cfg.obs_time);
    CHECK(rep.per_order.size() == static_cast<std::size_t>(2 * rep.n_upper - 1));
    CHECK(rep.total_dof >= 2.0 * rep.n_upper - 1.0);
    double sum = 0.0;
    for (const auto& row : rep.per_order) {
      CHECK(row.w_eff_hz >= 0.0);
      CHECK(row.w_eff_hz <= 2.0 * cfg.half_bw);
      sum += row.dof;
    }
    CHECK(rep.total_dof == sum);
    const std::size_t mid = rep.per_order.size() / 2;
    for (std::size_t i = 1; i <= mid; ++i) {
      CHECK(rep.per_order[mid + i].w_eff_hz == rep.per_order[mid - i].w_eff_hz);
      CHECK(rep.per_order[mid + i].w_eff_hz <= rep.per_order[mid + i - 1].w_eff_hz);
      if (i >= 2) CHECK(rep.per_order[mid + i].f_crit_hz >= rep.per_order[mid + i - 1].f_crit_hz);
    }
  }
}

TEST_CASE("critical frequency strictly increases with order") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto cfg = random_config(rng);
    for (int n = 2; n < 40; ++n) {
      CHECK(critical_frequency_unclamped(n, cfg) > critical_frequency_unclamped(n - 1, cfg));
    }
  }
}

TEST_CASE("report depends on powers only through their ratio") {
  ChannelConfig a = worked();
  a.obs_time = 1e-7;
  a.gamma = 0.3;
  ChannelConfig b = a;
  b.p_max *= 37.0;
  b.noise_var *= 37.0;
  const auto ra = total_dof(a), rb = total_dof(b);
  CHECK(ra.n_upper == rb.n_upper);
  CHECK(ra.total_dof == doctest::Approx(rb.total_dof).epsilon(1e-14));
  REQUIRE(ra.per_order.size() == rb.per_order.size());
  for (std::size_t i = 0; i < ra.per_order.size(); ++i) {
    CHECK(ra.per_order[i].w_eff_hz == doctest::Approx(rb.per_order[i].w_eff_hz).epsilon(1e-14));
  }
}

TEST_CASE("monotone in geometry, time, bandwidth and threshold") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const auto base = random_config(rng);
    ChannelConfig lo = base, hi = base;
    hi.radius *= 1.3;
    CHECK(total_dof(hi).total_dof >= total_dof(lo).total_dof);
    CHECK(total_dof(hi).n_upper >= total_dof(lo).n_upper);
    hi = base;
    hi.obs_time += 1e-7;
    CHECK(total_dof(hi).total_dof >= total_dof(lo).total_dof);
    hi = base;
    hi.half_bw = std::min(base.f0 * 0.99, base.half_bw * 1.1);
    CHECK(total_dof(hi).total_dof >= total_dof(lo).total_dof);
    hi = base;
    hi.gamma *= 2.0;
    CHECK(total_dof(hi).total_dof <= total_dof(lo).total_dof);
  }
}

TEST_CASE("degenerate radius and huge threshold") {
  ChannelConfig cfg = worked();
  cfg.radius = 0.0;
  cfg.obs_time = 1.0;
  cfg.p_max = 100.0;
  auto rep = total_dof(cfg);
  CHECK(rep.t_eff == 1.0);
  CHECK(rep.n_upper == 1);
  CHECK(rep.total_dof == 2.0 * cfg.half_bw * 1.0 + 1.0);

  // n = 0 row tends to the Shannon form as R -> 0
  cfg.obs_time = 1e-6;
  for (double r : {1e-3, 1e-6, 1e-9}) {
    cfg.radius = r;
    rep = total_dof(cfg);
    const auto& zero = rep.per_order[rep.per_order.size() / 2];
    CHECK(zero.n == 0);
    CHECK(zero.dof == doctest::Approx(2.0 * cfg.half_bw * (cfg.obs_time + 2 * r / cfg.wave_speed) + 1.0));
  }
  CHECK(rep.per_order[rep.per_order.size() / 2].dof ==
        doctest::Approx(2.0 * cfg.half_bw * cfg.obs_time + 1.0).epsilon(1e-6));

  cfg = worked();
  cfg.gamma = 1e30;
  rep = total_dof(cfg);
  CHECK(rep.total_dof >= 2.0 * rep.n_upper - 1.0);

  cfg = worked();
  cfg.half_bw = 3e9;
  CHECK_THROWS_AS(total_dof(cfg), ConfigError);
}

TEST_SUITE_END();
