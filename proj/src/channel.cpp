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

#include "wavedof/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavedof/detail/rng.hpp"
#include "wavedof/specfun.hpp"

namespace wavedof {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void violated(const std::string& invariant, const ChannelConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "invalid ChannelConfig: requires " << invariant << " (f0=" << cfg.f0
     << ", half_bw=" << cfg.half_bw << ", radius=" << cfg.radius
     << ", obs_time=" << cfg.obs_time << ", wave_speed=" << cfg.wave_speed
     << ", noise_var=" << cfg.noise_var << ", p_max=" << cfg.p_max << ", gamma=" << cfg.gamma
     << ")";
  throw ConfigError(os.str());
}

void validate_common(const ChannelConfig& cfg) {
  const double fields[] = {cfg.f0,        cfg.half_bw,   cfg.radius, cfg.obs_time,
                           cfg.wave_speed, cfg.noise_var, cfg.p_max,  cfg.gamma};
  for (double v : fields) {
    if (!std::isfinite(v)) {
      violated("all fields finite", cfg);
    }
  }
  if (!(cfg.half_bw > 0.0)) violated("half_bw > 0", cfg);
  if (!(cfg.f0 > cfg.half_bw)) violated("f0 > half_bw", cfg);
  if (!(cfg.radius >= 0.0)) violated("radius >= 0", cfg);
  if (!(cfg.obs_time >= 0.0)) violated("obs_time >= 0", cfg);
  if (!(cfg.wave_speed > 0.0)) violated("wave_speed > 0", cfg);
  if (!(cfg.gamma > 0.0)) violated("gamma > 0", cfg);
}

cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

void check_position(const ChannelConfig& cfg, Position x) {
  if (!(x.r >= 0.0) || x.r > cfg.radius * (1.0 + 1e-12) || !std::isfinite(x.phi)) {
    throw std::domain_error("position must satisfy 0 <= r <= radius");
  }
}

}  // namespace

void ChannelConfig::validate() const {
  validate_common(*this);
  if (!(noise_var > 0.0)) violated("noise_var > 0", *this);
  if (!(p_max > 0.0)) violated("p_max > 0", *this);
}

void ChannelConfig::validate_for_simulation() const {
  validate_common(*this);
  if (!(noise_var >= 0.0)) violated("noise_var >= 0", *this);
  if (!(p_max >= 0.0)) violated("p_max >= 0", *this);
}

double ChannelConfig::max_wavenumber() const { return kTwoPi * band_high() / wave_speed; }

ScattererSet::ScattererSet(std::vector<double> angles, std::vector<double> freq_grid,
                           std::vector<cplx> gains)
    : angles_(std::move(angles)), freq_grid_(std::move(freq_grid)), gains_(std::move(gains)) {
  if (angles_.empty()) {
    throw std::invalid_argument("ScattererSet needs at least one scatterer");
  }
  if (freq_grid_.empty()) {
    throw std::invalid_argument("ScattererSet needs a non-empty frequency grid");
  }
  for (std::size_t k = 1; k < freq_grid_.size(); ++k) {
    if (!(freq_grid_[k] > freq_grid_[k - 1])) {
      throw std::invalid_argument("ScattererSet frequency grid must be strictly increasing");
    }
  }
  if (gains_.size() != angles_.size() * freq_grid_.size()) {
    throw std::invalid_argument("ScattererSet gains must be |angles| x |freq_grid|");
  }
  for (double a : angles_) {
    if (!(a >= 0.0 && a < kTwoPi)) {
      throw std::invalid_argument("ScattererSet angles must lie in [0, 2 pi)");
    }
  }
}

std::vector<double> band_frequency_grid(const ChannelConfig& cfg, std::size_t num_freqs) {
  if (num_freqs < 2) {
    throw std::invalid_argument("num_freqs must be >= 2");
  }
  std::vector<double> grid(num_freqs);
  const double lo = cfg.band_low();
  const double step = (cfg.band_high() - lo) / static_cast<double>(num_freqs - 1);
  for (std::size_t k = 0; k < num_freqs; ++k) {
    grid[k] = lo + step * static_cast<double>(k);
  }
  grid.back() = cfg.band_high();
  return grid;
}

ScattererSet make_scatterers(const ChannelConfig& cfg, std::size_t num_scatterers,
                             std::size_t num_freqs, std::uint64_t seed) {
  return make_scatterers_on_grid(cfg, num_scatterers, band_frequency_grid(cfg, num_freqs), seed);
}

ScattererSet make_scatterers_on_grid(const ChannelConfig& cfg, std::size_t num_scatterers,
                                     std::vector<double> freq_grid, std::uint64_t seed) {
  cfg.validate_for_simulation();
  if (num_scatterers < 1) {
    throw std::invalid_argument("num_scatterers must be >= 1");
  }
  detail::Engine eng(detail::derive_seed(seed, detail::kStreamScatterers));
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<double> angles(num_scatterers);
  for (auto& a : angles) {
    a = uniform(eng);
    if (a >= kTwoPi) a = 0.0;
  }
  detail::ComplexGaussian draw(cfg.p_max / static_cast<double>(num_scatterers));
  std::vector<cplx> gains(num_scatterers * freq_grid.size());
  for (auto& g : gains) {
    g = draw(eng);
  }
  return ScattererSet(std::move(angles), std::move(freq_grid), std::move(gains));
}

std::size_t frequency_index(std::span<const double> freq_grid, double omega) {
  const double f = omega / kTwoPi;
  const auto it = std::lower_bound(freq_grid.begin(), freq_grid.end(), f);
  const double tol = 1e-12 * std::max(std::fabs(f), 1.0);
  for (auto cand : {it, it == freq_grid.begin() ? it : std::prev(it)}) {
    if (cand != freq_grid.end() && std::fabs(*cand - f) <= tol) {
      return static_cast<std::size_t>(cand - freq_grid.begin());
    }
  }
  throw std::out_of_range("angular frequency is not on the frequency grid");
}

cplx synth_field_planewave(const ScattererSet& s, const ChannelConfig& cfg, Position x,
                           double omega) {
  return synth_field_planewave_at(s, cfg, x, frequency_index(s.freq_grid(), omega));
}

cplx synth_field_planewave_at(const ScattererSet& s, const ChannelConfig& cfg, Position x,
                              std::size_t k) {
  check_position(cfg, x);
  const double kr = kTwoPi * s.freq_grid().at(k) / cfg.wave_speed * x.r;
  cplx sum{0.0, 0.0};
  for (std::size_t j = 0; j < s.num_scatterers(); ++j) {
    sum += s.gain(j, k) * std::polar(1.0, kr * std::cos(x.phi - s.angles()[j]));
  }
  return sum;
}

int required_modal_order(double kr) {
  return static_cast<int>(std::ceil(std::numbers::e * kr / 2.0)) + 12;
}

int required_modal_order(const ChannelConfig& cfg) {
  return required_modal_order(cfg.max_wavenumber() * cfg.radius);
}

ModalSpectrum modal_coefficients(const ScattererSet& s, int n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be >= 0");
  }
  ModalSpectrum ms;
  ms.n_max = n_max;
  ms.freq_grid = s.freq_grid();
  const std::size_t nf = s.num_freqs();
  ms.coeffs.assign(ms.num_orders() * nf, cplx{});
  for (int n = -n_max; n <= n_max; ++n) {
    cplx* row = &ms.coeffs[static_cast<std::size_t>(n + n_max) * nf];
    for (std::size_t j = 0; j < s.num_scatterers(); ++j) {
      const cplx phase = std::polar(1.0, -n * s.angles()[j]);
      for (std::size_t k = 0; k < nf; ++k) {
        row[k] += s.gain(j, k) * phase;
      }
    }
  }
  return ms;
}

std::vector<cplx> order_coefficients(const ScattererSet& s, int n) {
  std::vector<cplx> out(s.num_freqs());
  for (std::size_t j = 0; j < s.num_scatterers(); ++j) {
    const cplx phase = std::polar(1.0, -n * s.angles()[j]);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] += s.gain(j, k) * phase;
    }
  }
  return out;
}

double bessel_j_signed(int n, double z) {
  const int m = std::abs(n);
  const double v = specfun::bessel_j(m, z);
  return (n < 0 && (m % 2 == 1)) ? -v : v;
}

ModalFieldValue synth_field_modal(const ModalSpectrum& ms, const ChannelConfig& cfg, Position x,
                                  double omega) {
  return synth_field_modal_at(ms, cfg, x, frequency_index(ms.freq_grid, omega));
}

ModalFieldValue synth_field_modal_at(const ModalSpectrum& ms, const ChannelConfig& cfg,
                                     Position x, std::size_t k) {
  check_position(cfg, x);
  const double kr = kTwoPi * ms.freq_grid.at(k) / cfg.wave_speed * x.r;
  const std::vector<double> jn = specfun::bessel_j_sequence(ms.n_max, kr);
  cplx sum{0.0, 0.0};
  for (int n = -ms.n_max; n <= ms.n_max; ++n) {
    const int m = std::abs(n);
    double j = jn[static_cast<std::size_t>(m)];
    if (n < 0 && (m % 2 == 1)) j = -j;
    if (j == 0.0) continue;
    sum += i_pow(n) * ms.at(n, k) * j * std::polar(1.0, n * x.phi);
  }
  return {sum, ms.n_max >= required_modal_order(kr)};
}

FieldSamples synth_field_samples(const ScattererSet& s, const ChannelConfig& cfg,
                                 std::vector<Position> positions, bool with_noise,
                                 std::uint64_t seed) {
  FieldSamples out;
  out.freq_grid = s.freq_grid();
  out.noise_included = with_noise;
  out.values.resize(positions.size() * s.num_freqs());
  detail::Engine eng(detail::derive_seed(seed, detail::kStreamNoise));
  detail::ComplexGaussian draw(cfg.noise_var);
  for (std::size_t p = 0; p < positions.size(); ++p) {
    for (std::size_t k = 0; k < s.num_freqs(); ++k) {
      cplx v = synth_field_planewave_at(s, cfg, positions[p], k);
      if (with_noise) v += draw(eng);
      out.values[p * s.num_freqs() + k] = v;
    }
  }
  out.positions = std::move(positions);
  return out;
}

std::vector<double> circle_nodes(std::size_t num_samples) {
  std::vector<double> nodes(num_samples);
  for (std::size_t m = 0; m < num_samples; ++m) {
    nodes[m] = kTwoPi * (static_cast<double>(m) + 0.5) / static_cast<double>(num_samples);
  }
  return nodes;
}

std::vector<cplx> noise_modal_coefficients(const ChannelConfig& cfg, std::size_t num_samples,
                                           int n_max, std::uint64_t seed) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be >= 0");
  }
  if (num_samples < static_cast<std::size_t>(2 * n_max + 2)) {
    throw std::domain_error("aliasing: circle samples M must be >= 2 n_max + 2");
  }
  detail::Engine eng(detail::derive_seed(seed, detail::kStreamNoise));
  detail::ComplexGaussian draw(cfg.noise_var);
  const std::vector<double> nodes = circle_nodes(num_samples);
  std::vector<cplx> eta(num_samples);
  for (auto& e : eta) e = draw(eng);
  const double weight = std::sqrt(kTwoPi / static_cast<double>(num_samples));
  std::vector<cplx> nu(static_cast<std::size_t>(2 * n_max + 1));
  for (int n = -n_max; n <= n_max; ++n) {
    cplx acc{0.0, 0.0};
    for (std::size_t m = 0; m < num_samples; ++m) {
      acc += eta[m] * std::polar(1.0, -n * nodes[m]);
    }
    nu[static_cast<std::size_t>(n + n_max)] = weight * acc;
  }
  return nu;
}

cplx noise_order_coefficient(const ChannelConfig& cfg, std::size_t num_samples, int n,
                             std::uint64_t seed) {
  if (num_samples < static_cast<std::size_t>(2 * std::abs(n) + 2)) {
    throw std::domain_error("aliasing: circle samples M must be >= 2 |n| + 2");
  }
  detail::Engine eng(detail::derive_seed(seed, detail::kStreamNoise));
  detail::ComplexGaussian draw(cfg.noise_var);
  const std::vector<double> nodes = circle_nodes(num_samples);
  cplx acc{0.0, 0.0};
  for (std::size_t m = 0; m < num_samples; ++m) {
    acc += draw(eng) * std::polar(1.0, -n * nodes[m]);
  }
  return std::sqrt(kTwoPi / static_cast<double>(num_samples)) * acc;
}

std::vector<cplx> received_order_spectrum(const ModalSpectrum& ms, const ChannelConfig& cfg,
                                          int n, bool with_noise, std::uint64_t seed) {
  if (std::abs(n) > ms.n_max) {
    throw std::out_of_range("order exceeds the spectrum's n_max");
  }
  const std::size_t circle = static_cast<std::size_t>(2 * std::abs(n) + 2);
  std::vector<cplx> out(ms.freq_grid.size());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const double kr = kTwoPi * ms.freq_grid[k] / cfg.wave_speed * cfg.radius;
    out[k] = ms.at(n, k) * bessel_j_signed(n, kr);
    if (with_noise) {
      out[k] += noise_order_coefficient(cfg, circle, n,
                                        detail::derive_seed(seed, detail::kStreamNoise, k));
    }
  }
  return out;
}

}  // namespace wavedof
