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

#ifndef WAVEDOF_SPECFUN_HPP
#define WAVEDOF_SPECFUN_HPP

#include <optional>
#include <vector>

namespace wavedof::specfun {

/// Convergence controls for the series evaluations.
struct EvalPrecision {
  double rel_tol = 1e-10;
  int max_terms = 500;

  /// Throws std::invalid_argument unless rel_tol is in (0, 1e-6] and
  /// max_terms >= 50.
  void validate() const;
};

/// A positive quantity carried in the log domain. `value` is empty when
/// exp(log_value) is not representable as a finite double.
struct LogScalar {
  double log_value = 0.0;
  std::optional<double> value;

  static LogScalar from_log(double log_value);
};

inline constexpr int kMaxBesselOrder = 10000;

/// Bessel function of the first kind J_n(z) for integer n >= 0 and real z >= 0.
///
/// Uses the ascending power series for z <= max(12, n/2) and Miller's
/// backward recurrence normalized by J_0 + 2*sum(J_2k) = 1 otherwise. Both
/// run in extended precision. Throws std::domain_error for n < 0,
/// n > kMaxBesselOrder, z < 0 or non-finite z.
double bessel_j(int n, double z, const EvalPrecision& prec = {});

/// J_0(z), ..., J_{n_max}(z) from a single backward recurrence.
std::vector<double> bessel_j_sequence(int n_max, double z);

/// The leading term of the ascending series, (z/2)^n / Gamma(n+1).
/// Throws std::overflow_error when the result exceeds the double range.
double bessel_j_small_arg_approx(int n, double z);

/// log((z/2)^n / Gamma(n+1)); -infinity for z == 0 and n > 0.
double log_bessel_j_small_arg_approx(int n, double z);

/// T_n(z) by the three-term recurrence. Domain error for |z| > 1.
double chebyshev_first_kind(int n, double z);

/// U_n(z) by the three-term recurrence. Domain error for |z| > 1.
double chebyshev_second_kind(int n, double z);

/// sqrt(2*pi*n) * n^n * e^-n, a strict lower bound on Gamma(n+1) for n >= 1.
LogScalar stirling_gamma_lower(int n);

}  // namespace wavedof::specfun

#endif  // WAVEDOF_SPECFUN_HPP
