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

#ifndef WAVEDOF_CHANNEL_HPP
#define WAVEDOF_CHANNEL_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wavedof {

using cplx = std::complex<double>;

/// Raised when a configuration violates one of its invariants. The message
/// names the violated invariant.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Physical scenario: a field band limited to [f0 - half_bw, f0 + half_bw]
/// observed over a disk of the given radius for obs_time seconds.
struct ChannelConfig {
  double f0 = 2.4e9;           // center frequency, Hz
  double half_bw = 0.5e9;      // half bandwidth, Hz
  double radius = 0.1;         // disk radius, m
  double obs_time = 1e-6;      // observation window, s
  double wave_speed = 2.998e8; // m/s
  double noise_var = 1.0;      // sigma_0^2
  double p_max = 100.0;        // bound on E|alpha_n|^2
  double gamma = 1.0;          // detection threshold (SNR)

  /// Analysis invariants: f0 > half_bw > 0, radius >= 0, obs_time >= 0,
  /// wave_speed > 0, noise_var > 0, p_max > 0, gamma > 0.
  void validate() const;

  /// Same as validate() but admits the degenerate noise_var == 0 and
  /// p_max == 0 scenarios used by the verification harness.
  void validate_for_simulation() const;

  double band_low() const { return f0 - half_bw; }
  double band_high() const { return f0 + half_bw; }
  double max_wavenumber() const;
};

/// Polar position inside the disk.
struct Position {
  double r = 0.0;
  double phi = 0.0;
};

/// Discrete far-field scatterer ensemble: J point scatterers with complex
/// gains sampled on a shared frequency grid (Hz).
class ScattererSet {
 public:
  ScattererSet(std::vector<double> angles, std::vector<double> freq_grid, std::vector<cplx> gains);

  std::size_t num_scatterers() const { return angles_.size(); }
  std::size_t num_freqs() const { return freq_grid_.size(); }
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<double>& freq_grid() const { return freq_grid_; }
  /// Row-major, one row of num_freqs() gains per scatterer.
  const std::vector<cplx>& gains() const { return gains_; }
  cplx gain(std::size_t j, std::size_t k) const { return gains_[j * freq_grid_.size() + k]; }

  bool operator==(const ScattererSet&) const = default;

 private:
  std::vector<double> angles_;
  std::vector<double> freq_grid_;
  std::vector<cplx> gains_;
};

/// Per-order coefficients alpha_n(omega_k) for n in [-n_max, n_max].
struct ModalSpectrum {
  int n_max = 0;
  std::vector<double> freq_grid;
  std::vector<cplx> coeffs;  // row (n + n_max), column k

  std::size_t num_orders() const { return static_cast<std::size_t>(2 * n_max + 1); }
  cplx at(int n, std::size_t k) const {
    return coeffs[static_cast<std::size_t>(n + n_max) * freq_grid.size() + k];
  }
  cplx& at(int n, std::size_t k) {
    return coeffs[static_cast<std::size_t>(n + n_max) * freq_grid.size() + k];
  }
};

/// Complex field values on a (position, frequency) grid.
struct FieldSamples {
  std::vector<Position> positions;
  std::vector<double> freq_grid;
  std::vector<cplx> values;  // row per position, column per frequency
  bool noise_included = false;
};

struct ModalFieldValue {
  cplx value;
  bool truncation_met = true;
};

/// Uniform grid of num_freqs points on [f0 - W, f0 + W], endpoints included.
std::vector<double> band_frequency_grid(const ChannelConfig& cfg, std::size_t num_freqs);

/// Uncorrelated scattering ensemble: uniform angles, i.i.d. CN(0, p_max/J)
/// gains per (scatterer, frequency). Deterministic in `seed`.
ScattererSet make_scatterers(const ChannelConfig& cfg, std::size_t num_scatterers,
                             std::size_t num_freqs, std::uint64_t seed);

/// Same ensemble statistics on a caller-supplied, strictly increasing grid.
ScattererSet make_scatterers_on_grid(const ChannelConfig& cfg, std::size_t num_scatterers,
                                     std::vector<double> freq_grid, std::uint64_t seed);

/// Index of the grid frequency matching omega (rad/s). Throws
/// std::out_of_range when omega is not on the grid.
std::size_t frequency_index(std::span<const double> freq_grid, double omega);

/// Plane-wave superposition sum_j g_j(omega) exp(i (omega/c) r cos(phi_x - phi_j)).
cplx synth_field_planewave(const ScattererSet& s, const ChannelConfig& cfg, Position x,
                           double omega);
cplx synth_field_planewave_at(const ScattererSet& s, const ChannelConfig& cfg, Position x,
                              std::size_t k);

/// ceil(e * k_max * R / 2) + 12 with k_max = 2 pi (f0 + W) / c.
int required_modal_order(const ChannelConfig& cfg);

/// Order needed to represent the field at argument (omega/c) r.
int required_modal_order(double kr);

/// alpha_n(omega_k) = sum_j g_j(omega_k) exp(-i n phi_j) for |n| <= n_max.
ModalSpectrum modal_coefficients(const ScattererSet& s, int n_max);

/// alpha_n over the frequency grid for a single order.
std::vector<cplx> order_coefficients(const ScattererSet& s, int n);

/// Truncated modal sum sum_{|n| <= n_max} i^n alpha_n J_n(omega r / c) e^{i n phi_x}.
/// `truncation_met` is false when n_max is below required_modal_order(omega r / c).
ModalFieldValue synth_field_modal(const ModalSpectrum& ms, const ChannelConfig& cfg, Position x,
                                  double omega);
ModalFieldValue synth_field_modal_at(const ModalSpectrum& ms, const ChannelConfig& cfg,
                                     Position x, std::size_t k);

/// Field on every (position, frequency) pair by plane-wave synthesis,
/// optionally adding per-sample white noise of variance noise_var.
FieldSamples synth_field_samples(const ScattererSet& s, const ChannelConfig& cfg,
                                 std::vector<Position> positions, bool with_noise,
                                 std::uint64_t seed);

/// Midpoint-uniform node angles 2 pi (m + 1/2) / M on the circle.
std::vector<double> circle_nodes(std::size_t num_samples);

/// Spatial Fourier coefficients of white noise on the circle, orders
/// -n_max..n_max (index n + n_max). Each of the M nodes carries an i.i.d.
/// CN(0, noise_var) sample; the transform weights each node by
/// sqrt(2 pi / M), so E|nu_n|^2 = 2 pi noise_var. Throws std::domain_error
/// when M < 2 n_max + 2.
std::vector<cplx> noise_modal_coefficients(const ChannelConfig& cfg, std::size_t num_samples,
                                           int n_max, std::uint64_t seed);

/// nu_n alone for one order n, drawn from its own M-node realization.
cplx noise_order_coefficient(const ChannelConfig& cfg, std::size_t num_samples, int n,
                             std::uint64_t seed);

/// alpha_n(omega_k) J_n(omega_k R / c) + nu_n(omega_k) on the spectrum's grid.
/// Noise is independent across frequency samples.
std::vector<cplx> received_order_spectrum(const ModalSpectrum& ms, const ChannelConfig& cfg,
                                          int n, bool with_noise, std::uint64_t seed);

/// J_n for any integer order via J_{-n} = (-1)^n J_n.
double bessel_j_signed(int n, double z);

}  // namespace wavedof

#endif  // WAVEDOF_CHANNEL_HPP
