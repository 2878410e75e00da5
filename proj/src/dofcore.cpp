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

#include "wavedof/dofcore.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace wavedof {

namespace {

constexpr double kE = std::numbers::e;
constexpr double kPi = std::numbers::pi;

// Orders beyond this would make the per-order report unreasonably large.
constexpr long long kMaxTruncationOrder = 50'000'000;

void require_order(int n) {
  if (n < 1) {
    throw std::domain_error("order must be >= 1");
  }
}

// n + ln(gamma/snr_max)/2: the critical frequency in units of c/(e pi R).
double bracket(int n, const ChannelConfig& cfg) {
  return n + 0.5 * std::log(cfg.gamma / snr_max(cfg));
}

}  // namespace

double effective_time(const ChannelConfig& cfg) {
  return cfg.obs_time + 2.0 * cfg.radius / cfg.wave_speed;
}

double snr_max(const ChannelConfig& cfg) {
  if (!(cfg.noise_var > 0.0)) {
    throw std::domain_error("snr_max requires noise_var > 0");
  }
  return cfg.p_max / cfg.noise_var;
}

double critical_frequency_unclamped(int n, const ChannelConfig& cfg) {
  require_order(n);
  // A point aperture sees no angular variation: J_n(0) = 0 for n >= 1, so no
  // order above zero is ever detectable, whatever gamma / snr_max is.
  if (cfg.radius == 0.0) return std::numeric_limits<double>::infinity();
  return cfg.wave_speed * bracket(n, cfg) / (kE * kPi * cfg.radius);
}

double critical_frequency(int n, const ChannelConfig& cfg) {
  return std::max(0.0, critical_frequency_unclamped(n, cfg));
}

specfun::LogScalar snr_upper_bound(int n, double f_hz, const ChannelConfig& cfg) {
  require_order(n);
  if (!(f_hz >= 0.0)) {
    throw std::domain_error("frequency must be >= 0");
  }
  const double exponent = -(2.0 * n - 2.0 * kPi * kE * f_hz * cfg.radius / cfg.wave_speed);
  return specfun::LogScalar::from_log(std::log(snr_max(cfg)) + exponent);
}

specfun::LogScalar snr_upper_bound_with_beta(int n, double f_hz, const ChannelConfig& cfg) {
  require_order(n);
  if (!(f_hz >= 0.0)) {
    throw std::domain_error("frequency must be >= 0");
  }
  const double nn = n;
  const double log_beta = -std::log(2.0 * kPi * nn * (2.0 * nn + 1.0));
  const double arg = kE * 2.0 * kPi * f_hz * cfg.radius / (cfg.wave_speed * 2.0 * nn);
  return specfun::LogScalar::from_log(std::log(snr_max(cfg)) + log_beta + 2.0 * nn * std::log(arg));
}

specfun::LogScalar snr_small_arg_bound(int n, double f_hz, const ChannelConfig& cfg) {
  require_order(n);
  if (!(f_hz >= 0.0)) {
    throw std::domain_error("frequency must be >= 0");
  }
  const double nn = n;
  const double z = 2.0 * kPi * f_hz * cfg.radius / cfg.wave_speed;
  const double log_value = std::log(snr_max(cfg)) + 2.0 * nn * std::log(z / 2.0) -
                           2.0 * std::lgamma(nn + 1.0) - std::log(2.0 * nn + 1.0);
  return specfun::LogScalar::from_log(log_value);
}

int truncation_order(const ChannelConfig& cfg) {
  const double top = cfg.band_high();
  // F_n is affine in n, so jump close to the crossing and finish by scanning.
  long long n = 1;
  if (cfg.radius > 0.0) {
    const double offset = 0.5 * std::log(cfg.gamma / snr_max(cfg));
    if (std::isinf(offset)) {
      if (offset > 0.0) return 1;  // no signal power: every F_n is infinite
      throw std::domain_error("truncation order is unbounded for gamma / snr_max == 0");
    }
    const double crossing = top * kE * kPi * cfg.radius / cfg.wave_speed - offset;
    if (!(crossing < static_cast<double>(kMaxTruncationOrder))) {
      throw std::domain_error("truncation order exceeds the supported range");
    }
    n = std::max<long long>(1, static_cast<long long>(std::floor(crossing)) - 2);
  }
  while (n > 1 && critical_frequency(static_cast<int>(n - 1), cfg) > top) --n;
  while (!(critical_frequency(static_cast<int>(n), cfg) > top)) ++n;
  return static_cast<int>(n);
}

namespace {

double bandwidth_for(int n, int n_upper, const ChannelConfig& cfg) {
  const int m = std::abs(n);
  if (m == 0) return 2.0 * cfg.half_bw;
  if (m >= n_upper) return 0.0;
  const double w = cfg.band_high() - std::max(cfg.band_low(), critical_frequency(m, cfg));
  return std::clamp(w, 0.0, 2.0 * cfg.half_bw);
}

}  // namespace

double effective_bandwidth(int n, const ChannelConfig& cfg) {
  return bandwidth_for(n, n == 0 ? 1 : truncation_order(cfg), cfg);
}

DofReport total_dof(const ChannelConfig& cfg) {
  cfg.validate();
  DofReport report;
  report.config = cfg;
  report.t_eff = effective_time(cfg);
  report.n_upper = truncation_order(cfg);
  const int top = report.n_upper - 1;
  report.per_order.reserve(static_cast<std::size_t>(2 * top + 1));
  for (int n = -top; n <= top; ++n) {
    OrderDof row;
    row.n = n;
    row.f_crit_hz = n == 0 ? 0.0 : critical_frequency(std::abs(n), cfg);
    row.w_eff_hz = bandwidth_for(n, report.n_upper, cfg);
    row.dof = row.w_eff_hz * report.t_eff + 1.0;
    report.per_order.push_back(row);
  }
  double total = 0.0;
  for (const auto& row : report.per_order) total += row.dof;
  report.total_dof = total;
  return report;
}

}  // namespace wavedof
