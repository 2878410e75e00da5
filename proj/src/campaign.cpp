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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "wavedof/detail/rng.hpp"
#include "wavedof/dofcore.hpp"
#include "wavedof/verify.hpp"

namespace wavedof {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CheckResult make_check(std::string name, double estimate, double stderr_, double expected,
                       Verdict verdict, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.estimate = estimate;
  c.stderr_ = stderr_;
  c.expected = expected;
  c.verdict = verdict;
  c.detail = std::move(detail);
  return c;
}

void add_orthogonality(const TrialPlan& plan, std::vector<CheckResult>& out) {
  double worst = 0.0;
  for (int n = -plan.n_probe; n <= plan.n_probe; ++n) {
    for (int m = -plan.n_probe; m <= plan.n_probe; ++m) {
      worst = std::max(worst, orthogonality_check(n, m, plan.circle_samples));
    }
  }
  out.push_back(make_check("orthogonality", worst, 0.0, 0.0,
                           worst < 1e-12 ? Verdict::pass : Verdict::fail,
                           "max residual over |n|,|m| <= n_probe"));
}

void add_modal_equivalence(const ChannelConfig& cfg, const TrialPlan& plan,
                           std::vector<CheckResult>& out) {
  const ScattererSet s =
      make_scatterers(cfg, plan.num_scatterers, 3, detail::derive_seed(plan.seed, detail::kStreamConfig));
  const ModalSpectrum ms = modal_coefficients(s, required_modal_order(cfg));
  detail::Engine eng(detail::derive_seed(plan.seed, detail::kStreamConfig, 1));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_gap = 0.0;
  double scale = 0.0;
  for (int p = 0; p < 25; ++p) {
    const Position x{cfg.radius * std::sqrt(unit(eng)), kTwoPi * unit(eng)};
    for (std::size_t k = 0; k < s.num_freqs(); ++k) {
      const cplx plane = synth_field_planewave_at(s, cfg, x, k);
      const cplx modal = synth_field_modal_at(ms, cfg, x, k).value;
      worst_gap = std::max(worst_gap, std::abs(plane - modal));
      scale = std::max(scale, std::abs(plane));
    }
  }
  const double rel = scale > 0.0 ? worst_gap / scale : worst_gap;
  out.push_back(make_check("modal_planewave_equivalence", rel, 0.0, 0.0,
                           rel < 1e-8 ? Verdict::pass : Verdict::fail,
                           "max |planewave - modal| / max |planewave| over 25 positions"));
}

void add_power_balance(const ChannelConfig& cfg, const TrialPlan& plan,
                       std::vector<CheckResult>& out) {
  const PowerBalanceResult pb = power_balance_check(plan, cfg, kTwoPi * cfg.f0);
  out.push_back(make_check("power_balance", pb.measured, pb.stderr_, pb.predicted, pb.verdict,
                           "circle-averaged E|Psi|^2 vs p_max sum J_n^2 + sigma^2"));
  const bool has_signal = cfg.p_max > 0.0;
  out.push_back(make_check("power_balance_realization", pb.realization_residual, 0.0, 0.0,
                           !has_signal ? Verdict::skipped
                           : pb.realization_residual < 1e-6 ? Verdict::pass
                                                            : Verdict::fail,
                           "per-realization quadrature vs sum |alpha_n|^2 J_n^2"));
}

void add_snr_checks(const ChannelConfig& cfg, const TrialPlan& plan, std::vector<CheckResult>& out) {
  const DofPrediction pred = dof_prediction_check(cfg, plan);
  for (const auto& row : pred.orders) {
    const std::string tag = "[" + std::to_string(row.n) + "]";
    if (cfg.noise_var == 0.0) {
      out.push_back(make_check(std::string("order_snr") + tag, 0.0, 0.0, cfg.gamma, Verdict::skipped,
                               "no noise: SNR undefined"));
      continue;
    }
    out.push_back(make_check(std::string(to_string(row.kind)) + tag, row.snr.snr_hat, row.snr.stderr_,
                             cfg.gamma, row.verdict,
                             row.kind == PredictionKind::full_band ? "requires snr >= gamma"
                                                                   : "requires snr < gamma"));
    if (row.n >= 1 && row.kind != PredictionKind::full_band && cfg.p_max > 0.0) {
      const bool ok = row.snr.snr_hat <= row.bound + 3.0 * row.snr.stderr_;
      out.push_back(make_check("snr_bound" + tag, row.snr.snr_hat, row.snr.stderr_, row.bound,
                               ok ? Verdict::pass : Verdict::fail,
                               "empirical SNR must not exceed the exponential bound"));
    }
  }
}

void add_time_support(const ChannelConfig& cfg, std::vector<CheckResult>& out) {
  for (int n : {0, 1, 4, 8}) {
    const std::string tag = "[" + std::to_string(n) + "]";
    if (cfg.radius == 0.0) {
      out.push_back(make_check("time_support" + tag, 0.0, 0.0, 0.0, Verdict::skipped, "radius is zero"));
      continue;
    }
    const TimeSupportResult ts = time_support_check(n, cfg.radius, cfg);
    const double edge_error = std::fabs(ts.edge_s - ts.support_s) / ts.support_s;
    const bool ok = ts.leakage < 0.01 && edge_error <= 0.05;
    out.push_back(make_check("time_support" + tag, ts.leakage, 0.0, 0.0,
                             ok ? Verdict::pass : Verdict::fail,
                             "leakage < 0.01 and edge within 5% of R/c"));
  }
}

}  // namespace

bool CampaignResult::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.verdict == Verdict::fail; });
}

CampaignResult run_campaign(const ChannelConfig& cfg, const TrialPlan& plan) {
  plan.validate();
  cfg.validate_for_simulation();
  CampaignResult result;
  result.config = cfg;
  result.plan = plan;
  add_orthogonality(plan, result.checks);
  const NoiseVarianceResult noise = noise_variance_check(plan, cfg);
  for (auto& c : noise.checks()) result.checks.push_back(std::move(c));
  add_modal_equivalence(cfg, plan, result.checks);
  add_power_balance(cfg, plan, result.checks);
  add_snr_checks(cfg, plan, result.checks);
  add_time_support(cfg, result.checks);
  return result;
}

}  // namespace wavedof
