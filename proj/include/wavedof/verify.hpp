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

#ifndef WAVEDOF_VERIFY_HPP
#define WAVEDOF_VERIFY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavedof/channel.hpp"

namespace wavedof {

/// Monte Carlo campaign parameters.
struct TrialPlan {
  std::size_t num_trials = 2000;
  std::size_t circle_samples = 16;  // M
  std::uint64_t seed = 1;
  int n_probe = 4;
  std::size_t freq_samples = 64;
  std::size_t num_scatterers = 16;

  /// Requires M >= 2 n_probe + 2, freq_samples >= 2, num_scatterers >= 1 and
  /// num_trials >= 100 (>= 1 when `statistical` is false).
  void validate(bool statistical = true) const;
};

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

/// One line of a verification campaign.
struct CheckResult {
  std::string name;
  double estimate = 0.0;
  double stderr_ = 0.0;
  double expected = 0.0;
  Verdict verdict = Verdict::skipped;
  std::string detail;
};

/// Welford accumulator for sample mean and standard error.
class RunningMoments {
 public:
  void add(double x);
  std::size_t count() const { return count_; }
  double mean() const { return mean_; }
  double variance() const;  // unbiased
  double stderr_of_mean() const;

 private:
  std::size_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// |(2 pi / M) sum_k e^{i (n - m) phi_k} - expected| on midpoint-uniform
/// nodes, expected = 2 pi when n == m, else 0.
double orthogonality_check(int n, int m, std::size_t num_samples);

struct SnrEstimate {
  int n = 0;
  double band_lo_hz = 0.0;
  double band_hi_hz = 0.0;
  double snr_hat = 0.0;
  double stderr_ = 0.0;
};

/// Monte Carlo estimate of the order-n SNR
///   int E|alpha_n J_n(omega R/c)|^2 d omega / int sigma^2 d omega
/// over [f_lo, f_edge] (trapezoidal, plan.freq_samples nodes). Signal and
/// noise are drawn through make_scatterers_on_grid and the circle-noise
/// projection; the noise coefficient is measured on the orthonormal basis
/// e^{i n phi}/sqrt(2 pi) so that a noise-only order has power sigma^2.
/// Throws std::domain_error when noise_var == 0 or the band is degenerate.
SnrEstimate empirical_order_snr(const TrialPlan& plan, const ChannelConfig& cfg, int n,
                                double f_edge, double f_lo = 0.0);

struct NoiseOrderStats {
  int n = 0;
  double variance = 0.0;
  double variance_stderr = 0.0;
  std::complex<double> mean;
  double mean_stderr = 0.0;
};

struct NoisePairStats {
  int n = 0;
  int m = 0;
  std::complex<double> cross;  // E{nu_n nu_m^*}
  double stderr_ = 0.0;
};

struct NoiseVarianceResult {
  double expected_variance = 0.0;  // 2 pi sigma_0^2
  std::vector<NoiseOrderStats> orders;
  std::vector<NoisePairStats> pairs;

  std::vector<CheckResult> checks() const;
};

/// E|nu_n|^2, E{nu_n} and adjacent-order cross moments for |n| <= n_probe.
NoiseVarianceResult noise_variance_check(const TrialPlan& plan, const ChannelConfig& cfg);

struct PowerBalanceResult {
  double measured = 0.0;   // Monte Carlo mean of (1/M) sum |Psi(R, phi_m)|^2
  double predicted = 0.0;  // p_max sum J_n(kR)^2 + sigma_0^2
  double stderr_ = 0.0;
  double relative_residual = 0.0;
  // Worst per-realization relative gap between the quadrature power of the
  // noiseless plane-wave field and sum |alpha_n|^2 J_n(kR)^2.
  double realization_residual = 0.0;
  int n_max = 0;
  std::size_t circle_samples = 0;
  Verdict verdict = Verdict::skipped;
};

PowerBalanceResult power_balance_check(const TrialPlan& plan, const ChannelConfig& cfg,
                                       double omega);

/// Resolution of the discrete inverse transform used by time_support_check,
/// in units of the support half-width a = R/c.
struct TimeSupportGrid {
  double kr_max = 200.0;         // band edge, as omega a
  double taper_fraction = 0.3;   // cosine taper over the top fraction of the band
  double span = 3.0;             // time window [-span a, span a]
  std::size_t time_samples = 1201;
  std::size_t freq_samples = 0;  // 0 picks a step of pi / (8 span)
  double guard = 0.05;           // leakage counted outside (1 + guard) a
};

struct TimeSupportResult {
  double leakage = 0.0;    // energy fraction outside the guarded support
  double edge_s = 0.0;     // outermost half-max point of |psi(t)|^2
  double support_s = 0.0;  // R / c
};

/// Inverse-transforms a tapered J_n(omega R / c) and measures how much of
/// the kernel energy escapes [-(1+guard) R/c, (1+guard) R/c]. Throws
/// std::domain_error when the grid cannot resolve the support.
TimeSupportResult time_support_check(int n, double radius, const ChannelConfig& cfg,
                                     const TimeSupportGrid& grid = {});

enum class PredictionKind { below_critical, full_band, above_truncation };

const char* to_string(PredictionKind k);

struct OrderPrediction {
  int n = 0;
  PredictionKind kind = PredictionKind::below_critical;
  double f_crit_hz = 0.0;
  SnrEstimate snr;                    // drives the verdict
  std::optional<SnrEstimate> snr_band;  // same order integrated from f0 - W only
  double bound = 0.0;                 // snr_upper_bound at snr.band_hi_hz (orders >= 1)
  Verdict verdict = Verdict::skipped;
};

struct DofPrediction {
  int n_upper = 1;
  std::vector<OrderPrediction> orders;

  bool passed() const;
};

/// Per-order detectability predictions:
///  - full_band: probed orders n <= n_probe with F_n < f0 - W (and n = 0)
///    must reach gamma over [f0 - W, f0 + W] within 3 standard errors;
///  - below_critical: every 1 <= n < N_u with F_n > 0 must stay below gamma
///    on [0, F_n];
///  - above_truncation: order N_u must stay below gamma on [0, f0 + W].
/// With noise_var == 0 every probed order is reported as skipped.
DofPrediction dof_prediction_check(const ChannelConfig& cfg, const TrialPlan& plan);

/// Full campaign used by `wavedof simulate`.
struct CampaignResult {
  ChannelConfig config;
  TrialPlan plan;
  std::vector<CheckResult> checks;

  bool passed() const;
};

CampaignResult run_campaign(const ChannelConfig& cfg, const TrialPlan& plan);

}  // namespace wavedof

#endif  // WAVEDOF_VERIFY_HPP
