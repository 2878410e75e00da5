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

#ifndef WAVEDOF_DOFCORE_HPP
#define WAVEDOF_DOFCORE_HPP

#include <vector>

#include "wavedof/channel.hpp"
#include "wavedof/specfun.hpp"

namespace wavedof {

/// Degrees of freedom of a single spatial order.
struct OrderDof {
  int n = 0;
  double f_crit_hz = 0.0;
  double w_eff_hz = 0.0;
  double dof = 0.0;

  bool operator==(const OrderDof&) const = default;
};

struct DofReport {
  double t_eff = 0.0;              // seconds
  std::vector<OrderDof> per_order; // n = -(n_upper-1) .. n_upper-1
  int n_upper = 1;
  double total_dof = 0.0;
  ChannelConfig config;
};

/// T + 2R/c. Independent of the spatial order.
double effective_time(const ChannelConfig& cfg);

/// p_max / noise_var.
double snr_max(const ChannelConfig& cfg);

/// Minimum detectable frequency of order n >= 1:
///   max(0, n c/(e pi R) + c/(2 e pi R) ln(gamma / snr_max)).
/// Returns +infinity when R == 0 and the bracket is positive.
double critical_frequency(int n, const ChannelConfig& cfg);

/// The same expression without the clamp at zero.
double critical_frequency_unclamped(int n, const ChannelConfig& cfg);

/// snr_max * exp(-(2n - 2 pi e f R / c)), in the log domain.
specfun::LogScalar snr_upper_bound(int n, double f_hz, const ChannelConfig& cfg);

/// Tighter diagnostic form that keeps beta = 1/(2 pi n (2n+1)):
///   snr_max * beta * (e omega R / (2 n c))^{2n}.
specfun::LogScalar snr_upper_bound_with_beta(int n, double f_hz, const ChannelConfig& cfg);

/// Closed form of the small-argument bound before Stirling:
///   snr_max (R/c)^{2n} omega^{2n} / (2^{2n} Gamma(n+1)^2 (2n+1)).
specfun::LogScalar snr_small_arg_bound(int n, double f_hz, const ChannelConfig& cfg);

/// N_u: the smallest n >= 1 with critical_frequency(n) > f0 + W.
int truncation_order(const ChannelConfig& cfg);

/// W_n: 2W for n = 0, f0 + W - max(f0 - W, F_|n|) for |n| < N_u, else 0.
double effective_bandwidth(int n, const ChannelConfig& cfg);

/// Per-order and total degrees of freedom, sum over |n| < N_u of W_n T_eff + 1.
DofReport total_dof(const ChannelConfig& cfg);

}  // namespace wavedof

#endif  // WAVEDOF_DOFCORE_HPP
