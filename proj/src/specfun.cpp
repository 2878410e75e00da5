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

#include "wavedof/specfun.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wavedof::specfun {

namespace {

using Real = long double;

constexpr Real kRescaleAbove = 1e300L;
constexpr Real kRescaleFactor = 1e-300L;

void check_order(int n) {
  if (n < 0 || n > kMaxBesselOrder) {
    throw std::domain_error("bessel order out of range: " + std::to_string(n));
  }
}

void check_argument(double z) {
  if (!std::isfinite(z) || z < 0.0) {
    throw std::domain_error("bessel argument must be finite and >= 0");
  }
}

void check_unit_interval(double z) {
  if (!(std::fabs(z) <= 1.0)) {
    throw std::domain_error("chebyshev argument must lie in [-1, 1]");
  }
}

// Ascending series sum_k (-z^2/4)^k / (k! (n+k)!) scaled by (z/2)^n.
Real ascending_series(int n, Real z, const EvalPrecision& prec) {
  const Real half = z / 2;
  const Real log_lead = n * std::log(half) - std::lgamma(static_cast<Real>(n) + 1);
  if (log_lead < -11000.0L) {
    return 0;  // far below the long double range
  }
  const Real lead = std::exp(log_lead);
  const Real q = -half * half;
  Real term = 1;
  Real sum = 1;
  const Real stop = static_cast<Real>(prec.rel_tol) * 1e-12L;
  for (int k = 1;; ++k) {
    term *= q / (static_cast<Real>(k) * static_cast<Real>(n + k));
    sum += term;
    if (std::fabs(term) <= stop * std::fabs(sum)) {
      break;
    }
    if (k >= prec.max_terms) {
      throw std::runtime_error("bessel series did not converge within max_terms");
    }
  }
  return lead * sum;
}

int miller_start(int n_max, Real z) {
  const Real m = std::max<Real>(static_cast<Real>(n_max), z);
  const Real start = m + 14 * std::cbrt(m) + 30;
  int s = static_cast<int>(std::ceil(start));
  return s + (s & 1);  // even, so the normalization sum ends on J_0
}

// Backward recurrence from a high order down to 0. Fills out[0..n_max]
// (already normalized).
void miller(int n_max, Real z, std::vector<Real>& out) {
  const int start = miller_start(n_max, z);
  out.assign(static_cast<std::size_t>(n_max) + 1, 0);
  Real above = 0;  // J_{k+1}
  Real cur = 1e-30L;  // J_k
  Real norm = 0;
  const Real two_over_z = 2 / z;
  for (int k = start; k >= 0; --k) {
    if (k <= n_max) {
      out[static_cast<std::size_t>(k)] = cur;
    }
    if (k % 2 == 0) {
      norm += (k == 0 ? 1 : 2) * cur;
    }
    if (k == 0) {
      break;
    }
    const Real below = static_cast<Real>(k) * two_over_z * cur - above;
    above = cur;
    cur = below;
    if (std::fabs(cur) > kRescaleAbove) {
      cur *= kRescaleFactor;
      above *= kRescaleFactor;
      norm *= kRescaleFactor;
      for (int j = k; j <= n_max; ++j) {
        out[static_cast<std::size_t>(j)] *= kRescaleFactor;
      }
    }
  }
  for (auto& v : out) {
    v /= norm;
  }
}

bool use_series(int n, double z) { return z <= std::max(12.0, n / 2.0); }

}  // namespace

void EvalPrecision::validate() const {
  if (!(rel_tol > 0.0 && rel_tol <= 1e-6)) {
    throw std::invalid_argument("EvalPrecision.rel_tol must lie in (0, 1e-6]");
  }
  if (max_terms < 50) {
    throw std::invalid_argument("EvalPrecision.max_terms must be >= 50");
  }
}

LogScalar LogScalar::from_log(double log_value) {
  LogScalar out;
  out.log_value = log_value;
  if (log_value <= std::log(DBL_MAX)) {
    out.value = std::exp(log_value);
  }
  return out;
}

double bessel_j(int n, double z, const EvalPrecision& prec) {
  check_order(n);
  check_argument(z);
  prec.validate();
  if (z == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  if (use_series(n, z)) {
    return static_cast<double>(ascending_series(n, z, prec));
  }
  std::vector<Real> seq;
  miller(n, z, seq);
  return static_cast<double>(seq.back());
}

std::vector<double> bessel_j_sequence(int n_max, double z) {
  check_order(n_max);
  check_argument(z);
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1, 0.0);
  if (z == 0.0) {
    out[0] = 1.0;
    return out;
  }
  if (z <= 12.0) {
    const EvalPrecision prec;
    for (int n = 0; n <= n_max; ++n) {
      const double v = static_cast<double>(ascending_series(n, z, prec));
      out[static_cast<std::size_t>(n)] = v;
      if (v == 0.0) {
        break;  // every higher order underflows too
      }
    }
    return out;
  }
  std::vector<Real> seq;
  miller(n_max, z, seq);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    out[k] = static_cast<double>(seq[k]);
  }
  return out;
}

double log_bessel_j_small_arg_approx(int n, double z) {
  check_order(n);
  check_argument(z);
  if (n == 0) {
    return 0.0;
  }
  if (z == 0.0) {
    return -std::numeric_limits<double>::infinity();
  }
  return n * std::log(z / 2.0) - std::lgamma(n + 1.0);
}

double bessel_j_small_arg_approx(int n, double z) {
  const double log_value = log_bessel_j_small_arg_approx(n, z);
  if (log_value > std::log(DBL_MAX)) {
    throw std::overflow_error("small-argument Bessel approximant overflows for n=" +
                              std::to_string(n));
  }
  return std::exp(log_value);
}

double chebyshev_first_kind(int n, double z) {
  if (n < 0) {
    throw std::domain_error("chebyshev degree must be >= 0");
  }
  check_unit_interval(z);
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double chebyshev_second_kind(int n, double z) {
  if (n < 0) {
    throw std::domain_error("chebyshev degree must be >= 0");
  }
  check_unit_interval(z);
  if (n == 0) {
    return 1.0;
  }
  double prev = 1.0;
  double cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

LogScalar stirling_gamma_lower(int n) {
  if (n < 1) {
    throw std::domain_error("stirling_gamma_lower requires n >= 1");
  }
  const double nn = n;
  return LogScalar::from_log(0.5 * std::log(2.0 * std::numbers::pi * nn) + nn * std::log(nn) - nn);
}

}  // namespace wavedof::specfun
