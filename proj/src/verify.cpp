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

#include "wavedof/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wavedof/detail/rng.hpp"
#include "wavedof/dofcore.hpp"
#include "wavedof/specfun.hpp"

namespace wavedof {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> trapezoid_weights(const std::vector<double>& grid) {
  std::vector<double> w(grid.size(), 0.0);
  for (std::size_t k = 1; k < grid.size(); ++k) {
    const double h = 0.5 * (grid[k] - grid[k - 1]);
    w[k - 1] += h;
    w[k] += h;
  }
  return w;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
  std::vector<double> grid(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) grid[k] = lo + step * static_cast<double>(k);
  grid.back() = hi;
  return grid;
}

// Complex sample mean with stderr sqrt((var_re + var_im) / T).
struct ComplexMoments {
  RunningMoments re;
  RunningMoments im;

  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> mean() const { return {re.mean(), im.mean()}; }
  double stderr_of_mean() const {
    if (re.count() < 2) return 0.0;
    return std::sqrt((re.variance() + im.variance()) / static_cast<double>(re.count()));
  }
};

Verdict within(double estimate, double expected, double stderr_) {
  const double gap = std::fabs(estimate - expected);
  if (stderr_ == 0.0) return gap == 0.0 ? Verdict::pass : Verdict::fail;
  return gap <= 3.0 * stderr_ ? Verdict::pass : Verdict::fail;
}

}  // namespace

void TrialPlan::validate(bool statistical) const {
  if (num_trials < (statistical ? 100u : 1u)) {
    throw std::invalid_argument(statistical ? "TrialPlan.num_trials must be >= 100"
                                            : "TrialPlan.num_trials must be >= 1");
  }
  if (n_probe < 0) {
    throw std::invalid_argument("TrialPlan.n_probe must be >= 0");
  }
  if (circle_samples < static_cast<std::size_t>(2 * n_probe + 2)) {
    throw std::invalid_argument("TrialPlan.circle_samples must be >= 2 n_probe + 2");
  }
  if (freq_samples < 2) {
    throw std::invalid_argument("TrialPlan.freq_samples must be >= 2");
  }
  if (num_scatterers < 1) {
    throw std::invalid_argument("TrialPlan.num_scatterers must be >= 1");
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "skipped";
  }
}

const char* to_string(PredictionKind k) {
  switch (k) {
    case PredictionKind::below_critical: return "below_critical";
    case PredictionKind::full_band: return "full_band";
    default: return "above_truncation";
  }
}

void RunningMoments::add(double x) {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

double RunningMoments::variance() const {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningMoments::stderr_of_mean() const {
  return count_ < 2 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

double orthogonality_check(int n, int m, std::size_t num_samples) {
  if (num_samples == 0) {
    throw std::invalid_argument("orthogonality_check needs at least one node");
  }
  const std::vector<double> nodes = circle_nodes(num_samples);
  std::complex<double> acc{0.0, 0.0};
  for (double phi : nodes) acc += std::polar(1.0, (n - m) * phi);
  acc *= kTwoPi / static_cast<double>(num_samples);
  const double expected = n == m ? kTwoPi : 0.0;
  return std::abs(acc - expected);
}

SnrEstimate empirical_order_snr(const TrialPlan& plan, const ChannelConfig& cfg, int n,
                                double f_edge, double f_lo) {
  plan.validate(false);
  cfg.validate_for_simulation();
  if (!(cfg.noise_var > 0.0)) {
    throw std::domain_error("order SNR is undefined without noise");
  }
  if (!(f_lo >= 0.0) || !(f_edge > f_lo) || f_edge > cfg.band_high() * (1.0 + 1e-12)) {
    throw std::domain_error("degenerate SNR band: need 0 <= f_lo < f_edge <= f0 + W");
  }
  const std::vector<double> grid = uniform_grid(f_lo, f_edge, plan.freq_samples);
  const std::vector<double> weight = trapezoid_weights(grid);
  std::vector<double> bessel_sq(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double j = bessel_j_signed(n, kTwoPi * grid[k] * cfg.radius / cfg.wave_speed);
    bessel_sq[k] = j * j;
  }
  const std::size_t circle = std::max(plan.circle_samples, static_cast<std::size_t>(2 * std::abs(n) + 2));
  const double orthonormal = 1.0 / std::sqrt(kTwoPi);

  RunningMoments signal;
  RunningMoments noise;
  for (std::size_t t = 0; t < plan.num_trials; ++t) {
    const std::uint64_t trial_seed =
        detail::derive_seed(plan.seed, detail::kStreamTrial, (static_cast<std::uint64_t>(t) << 20) ^
                                                                 static_cast<std::uint64_t>(n + 524288));
    const ScattererSet s = make_scatterers_on_grid(cfg, plan.num_scatterers, grid, trial_seed);
    const std::vector<cplx> alpha = order_coefficients(s, n);
    double sig = 0.0;
    double noi = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      sig += weight[k] * std::norm(alpha[k]) * bessel_sq[k];
      const cplx nu = orthonormal * noise_order_coefficient(
                                        cfg, circle, n,
                                        detail::derive_seed(trial_seed, detail::kStreamNoise, k));
      noi += weight[k] * std::norm(nu);
    }
    signal.add(sig);
    noise.add(noi);
  }

  SnrEstimate est;
  est.n = n;
  est.band_lo_hz = f_lo;
  est.band_hi_hz = f_edge;
  const double s_bar = signal.mean();
  const double n_bar = noise.mean();
  est.snr_hat = s_bar / n_bar;
  // Delta method for a ratio of independent means.
  const double trials = static_cast<double>(plan.num_trials);
  const double var_ratio =
      (signal.variance() / (n_bar * n_bar) + s_bar * s_bar * noise.variance() / std::pow(n_bar, 4)) /
      trials;
  est.stderr_ = std::sqrt(var_ratio);
  return est;
}

std::vector<CheckResult> NoiseVarianceResult::checks() const {
  std::vector<CheckResult> out;
  for (const auto& o : orders) {
    CheckResult c;
    c.name = "noise_variance[" + std::to_string(o.n) + "]";
    c.estimate = o.variance;
    c.stderr_ = o.variance_stderr;
    c.expected = expected_variance;
    c.verdict = within(o.variance, expected_variance, o.variance_stderr);
    out.push_back(c);
  }
  for (const auto& o : orders) {
    CheckResult c;
    c.name = "noise_mean[" + std::to_string(o.n) + "]";
    c.estimate = std::abs(o.mean);
    c.stderr_ = o.mean_stderr;
    c.expected = 0.0;
    c.verdict = within(c.estimate, 0.0, o.mean_stderr);
    out.push_back(c);
  }
  for (const auto& p : pairs) {
    CheckResult c;
    c.name = "noise_cross[" + std::to_string(p.n) + "," + std::to_string(p.m) + "]";
    c.estimate = std::abs(p.cross);
    c.stderr_ = p.stderr_;
    c.expected = 0.0;
    c.verdict = within(c.estimate, 0.0, p.stderr_);
    out.push_back(c);
  }
  return out;
}

NoiseVarianceResult noise_variance_check(const TrialPlan& plan, const ChannelConfig& cfg) {
  plan.validate();
  cfg.validate_for_simulation();
  const int n_max = plan.n_probe;
  const std::size_t orders = static_cast<std::size_t>(2 * n_max + 1);
  std::vector<RunningMoments> power(orders);
  std::vector<ComplexMoments> mean(orders);
  std::vector<ComplexMoments> cross(orders - 1);
  for (std::size_t t = 0; t < plan.num_trials; ++t) {
    const std::vector<cplx> nu = noise_modal_coefficients(
        cfg, plan.circle_samples, n_max, detail::derive_seed(plan.seed, detail::kStreamTrial, t));
    for (std::size_t i = 0; i < orders; ++i) {
      power[i].add(std::norm(nu[i]));
      mean[i].add(nu[i]);
      if (i + 1 < orders) cross[i].add(nu[i] * std::conj(nu[i + 1]));
    }
  }
  NoiseVarianceResult result;
  result.expected_variance = kTwoPi * cfg.noise_var;
  for (std::size_t i = 0; i < orders; ++i) {
    NoiseOrderStats s;
    s.n = static_cast<int>(i) - n_max;
    s.variance = power[i].mean();
    s.variance_stderr = power[i].stderr_of_mean();
    s.mean = mean[i].mean();
    s.mean_stderr = mean[i].stderr_of_mean();
    result.orders.push_back(s);
  }
  for (std::size_t i = 0; i + 1 < orders; ++i) {
    NoisePairStats p;
    p.n = static_cast<int>(i) - n_max;
    p.m = p.n + 1;
    p.cross = cross[i].mean();
    p.stderr_ = cross[i].stderr_of_mean();
    result.pairs.push_back(p);
  }
  return result;
}

PowerBalanceResult power_balance_check(const TrialPlan& plan, const ChannelConfig& cfg,
                                       double omega) {
  plan.validate(false);
  cfg.validate_for_simulation();
  if (!(omega > 0.0)) {
    throw std::domain_error("power_balance_check needs omega > 0");
  }
  const double kr = omega / cfg.wave_speed * cfg.radius;
  PowerBalanceResult result;
  result.n_max = required_modal_order(kr);
  result.circle_samples = std::max(plan.circle_samples, static_cast<std::size_t>(4 * result.n_max));
  const std::vector<double> jn = specfun::bessel_j_sequence(result.n_max, kr);
  double bessel_power = jn[0] * jn[0];
  for (int n = 1; n <= result.n_max; ++n) bessel_power += 2.0 * jn[static_cast<std::size_t>(n)] * jn[static_cast<std::size_t>(n)];
  result.predicted = cfg.p_max * bessel_power + cfg.noise_var;

  const std::vector<double> nodes = circle_nodes(result.circle_samples);
  const double inv_m = 1.0 / static_cast<double>(result.circle_samples);
  const std::vector<double> grid{omega / kTwoPi};
  RunningMoments power;
  for (std::size_t t = 0; t < plan.num_trials; ++t) {
    const std::uint64_t trial_seed = detail::derive_seed(plan.seed, detail::kStreamTrial, t);
    const ScattererSet s = make_scatterers_on_grid(cfg, plan.num_scatterers, grid, trial_seed);
    detail::Engine eng(detail::derive_seed(trial_seed, detail::kStreamNoise));
    detail::ComplexGaussian draw(cfg.noise_var);
    double signal_only = 0.0;
    double total = 0.0;
    for (double phi : nodes) {
      const cplx field = synth_field_planewave_at(s, cfg, Position{cfg.radius, phi}, 0);
      signal_only += std::norm(field);
      total += std::norm(field + draw(eng));
    }
    power.add(total * inv_m);

    const ModalSpectrum ms = modal_coefficients(s, result.n_max);
    double modal = 0.0;
    for (int n = -result.n_max; n <= result.n_max; ++n) {
      const double j = jn[static_cast<std::size_t>(std::abs(n))];
      modal += std::norm(ms.at(n, 0)) * j * j;
    }
    const double quad = signal_only * inv_m;
    if (quad > 0.0) {
      result.realization_residual = std::max(result.realization_residual, std::fabs(quad - modal) / quad);
    }
  }
  result.measured = power.mean();
  result.stderr_ = power.stderr_of_mean();
  result.relative_residual =
      result.predicted > 0.0 ? std::fabs(result.measured - result.predicted) / result.predicted
                             : std::fabs(result.measured);
  result.verdict = within(result.measured, result.predicted, result.stderr_);
  if (result.stderr_ == 0.0 && result.relative_residual < 1e-12) result.verdict = Verdict::pass;
  return result;
}

TimeSupportResult time_support_check(int n, double radius, const ChannelConfig& cfg,
                                     const TimeSupportGrid& grid) {
  if (n < 0) {
    throw std::domain_error("time_support_check needs n >= 0");
  }
  if (!(radius > 0.0) || !(cfg.wave_speed > 0.0)) {
    throw std::domain_error("time_support_check needs radius > 0 and wave_speed > 0");
  }
  if (!(grid.kr_max > 0.0) || !(grid.span > 1.0 + grid.guard) || grid.time_samples < 3 ||
      !(grid.taper_fraction >= 0.0 && grid.taper_fraction <= 1.0) || !(grid.guard >= 0.0)) {
    throw std::domain_error("time_support_check: malformed grid");
  }
  const double dt = 2.0 * grid.span / static_cast<double>(grid.time_samples - 1);
  std::vector<double> tau(grid.time_samples);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    tau[i] = -grid.span + dt * static_cast<double>(i);
    if (std::fabs(tau[i]) <= 1.0) ++inside;
  }
  if (inside < 64) {
    throw std::domain_error("time_support_check: fewer than 64 time samples inside the support");
  }
  std::size_t nx = grid.freq_samples;
  if (nx == 0) {
    nx = static_cast<std::size_t>(std::ceil(grid.kr_max / (std::numbers::pi / (8.0 * grid.span)))) + 1;
  }
  if (nx < 2) {
    throw std::domain_error("time_support_check: too few frequency samples");
  }
  const double dx = grid.kr_max / static_cast<double>(nx - 1);
  if (dx * grid.span > std::numbers::pi / 2.0) {
    throw std::domain_error("time_support_check: frequency step too coarse for the time window");
  }

  // Tapered kernel samples with trapezoid weights, x = omega R / c.
  const double taper_start = (1.0 - grid.taper_fraction) * grid.kr_max;
  std::vector<double> x(nx);
  std::vector<double> f(nx);
  for (std::size_t k = 0; k < nx; ++k) {
    x[k] = dx * static_cast<double>(k);
    double w = 1.0;
    if (x[k] > taper_start) {
      w = 0.5 * (1.0 + std::cos(std::numbers::pi * (x[k] - taper_start) / (grid.kr_max - taper_start)));
    }
    const double trap = (k == 0 || k + 1 == nx) ? 0.5 * dx : dx;
    f[k] = w * trap * specfun::bessel_j(n, x[k]);
  }
  // J_n(-x) = (-1)^n J_n(x): even orders give a cosine transform, odd a sine one.
  const bool even = n % 2 == 0;
  std::vector<double> energy(tau.size());
  double total = 0.0;
  double outside = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    double acc = 0.0;
    for (std::size_t k = 0; k < nx; ++k) {
      acc += f[k] * (even ? std::cos(x[k] * tau[i]) : std::sin(x[k] * tau[i]));
    }
    energy[i] = acc * acc;
    total += energy[i];
    if (std::fabs(tau[i]) > 1.0 + grid.guard) outside += energy[i];
    peak = std::max(peak, energy[i]);
  }
  double edge = 0.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (energy[i] >= 0.5 * peak) edge = std::max(edge, std::fabs(tau[i]));
  }
  const double a = radius / cfg.wave_speed;
  TimeSupportResult result;
  result.leakage = total > 0.0 ? outside / total : 0.0;
  result.edge_s = edge * a;
  result.support_s = a;
  return result;
}

bool DofPrediction::passed() const {
  return std::none_of(orders.begin(), orders.end(),
                      [](const OrderPrediction& o) { return o.verdict == Verdict::fail; });
}

DofPrediction dof_prediction_check(const ChannelConfig& cfg, const TrialPlan& plan) {
  plan.validate();
  cfg.validate_for_simulation();
  DofPrediction out;
  if (!(cfg.noise_var > 0.0)) {
    for (int n = 0; n <= plan.n_probe; ++n) {
      OrderPrediction row;
      row.n = n;
      out.orders.push_back(row);  // skipped: no noise, no SNR
    }
    return out;
  }
  out.n_upper = truncation_order(cfg);
  const bool has_signal = cfg.p_max > 0.0;
  auto finish_bound = [&](OrderPrediction& row) {
    if (row.n >= 1 && has_signal) {
      const auto bound = snr_upper_bound(row.n, row.snr.band_hi_hz, cfg);
      row.bound = bound.value.value_or(std::numeric_limits<double>::infinity());
    }
  };

  // Usable orders probed over the whole band.
  for (int n = 0; n <= std::min(plan.n_probe, out.n_upper - 1); ++n) {
    const double f_crit = n == 0 ? 0.0 : critical_frequency(n, cfg);
    if (n > 0 && !(f_crit < cfg.band_low())) continue;
    OrderPrediction row;
    row.n = n;
    row.kind = PredictionKind::full_band;
    row.f_crit_hz = f_crit;
    row.snr = empirical_order_snr(plan, cfg, n, cfg.band_high(), cfg.band_low());
    if (!has_signal) {
      row.verdict = Verdict::skipped;
    } else {
      row.verdict = row.snr.snr_hat + 3.0 * row.snr.stderr_ >= cfg.gamma ? Verdict::pass : Verdict::fail;
    }
    out.orders.push_back(row);
  }

  // Every retained order stays undetectable below its critical frequency.
  for (int n = 1; n < out.n_upper; ++n) {
    OrderPrediction row;
    row.n = n;
    row.kind = PredictionKind::below_critical;
    row.f_crit_hz = critical_frequency(n, cfg);
    if (!(row.f_crit_hz > 0.0)) continue;  // detectable from 0 Hz: nothing to check
    row.snr = empirical_order_snr(plan, cfg, n, row.f_crit_hz, 0.0);
    if (row.f_crit_hz > cfg.band_low()) {
      row.snr_band = empirical_order_snr(plan, cfg, n, row.f_crit_hz, cfg.band_low());
    }
    row.verdict = row.snr.snr_hat < cfg.gamma ? Verdict::pass : Verdict::fail;
    finish_bound(row);
    out.orders.push_back(row);
  }

  // The first truncated order carries no detectable signal anywhere in [0, f0 + W].
  OrderPrediction row;
  row.n = out.n_upper;
  row.kind = PredictionKind::above_truncation;
  row.f_crit_hz = critical_frequency(out.n_upper, cfg);
  row.snr = empirical_order_snr(plan, cfg, out.n_upper, cfg.band_high(), 0.0);
  row.snr_band = empirical_order_snr(plan, cfg, out.n_upper, cfg.band_high(), cfg.band_low());
  row.verdict = row.snr.snr_hat < cfg.gamma ? Verdict::pass : Verdict::fail;
  finish_bound(row);
  out.orders.push_back(row);
  return out;
}

}  // namespace wavedof
