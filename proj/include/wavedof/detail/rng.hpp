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

#ifndef WAVEDOF_DETAIL_RNG_HPP
#define WAVEDOF_DETAIL_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace wavedof::detail {

using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (seed, stream, index). Every consumer of
// randomness derives its own engine from this, so results never depend on
// evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

// Stream tags.
inline constexpr std::uint64_t kStreamScatterers = 0x5ca7;
inline constexpr std::uint64_t kStreamNoise = 0x9015e;
inline constexpr std::uint64_t kStreamTrial = 0x7a1a1;
inline constexpr std::uint64_t kStreamConfig = 0xc0f1;

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(double variance) : scale_(std::sqrt(variance / 2.0)) {}

  // Always consumes two normal draws, so zero variance keeps streams aligned.
  std::complex<double> operator()(Engine& eng) {
    const double re = normal_(eng);
    const double im = normal_(eng);
    return {scale_ * re, scale_ * im};
  }

 private:
  double scale_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace wavedof::detail

#endif  // WAVEDOF_DETAIL_RNG_HPP
