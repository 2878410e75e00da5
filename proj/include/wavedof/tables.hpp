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

#ifndef WAVEDOF_TABLES_HPP
#define WAVEDOF_TABLES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wavedof/channel.hpp"

namespace wavedof {

enum class SweepAxis { radius, half_bw, gamma, obs_time };

SweepAxis parse_sweep_axis(std::string_view name);
const char* to_string(SweepAxis axis);

struct SweepRow {
  double value = 0.0;
  int n_upper = 1;
  double t_eff = 0.0;
  double total_dof = 0.0;
};

/// One DoF evaluation per value. Values must be strictly increasing and
/// every resulting config valid; otherwise throws ConfigError before any
/// row is computed.
std::vector<SweepRow> run_sweep(const ChannelConfig& base, SweepAxis axis,
                                std::span<const double> values);

std::string sweep_to_csv(const ChannelConfig& base, SweepAxis axis,
                         const std::vector<SweepRow>& rows, std::uint64_t seed);
std::string sweep_to_json(const ChannelConfig& base, SweepAxis axis,
                          const std::vector<SweepRow>& rows, std::uint64_t seed);

/// J_n(z) on `samples` points of [0, z_max], columns z,J<n>...
std::string bessel_table_csv(std::span<const int> orders, std::size_t samples, double z_max);

/// T_n(z) and U_n(z) on `samples` points of [-1, 1], columns z,T<n>...,U<n>...
std::string chebyshev_table_csv(std::span<const int> orders, std::size_t samples);

}  // namespace wavedof

#endif  // WAVEDOF_TABLES_HPP
