// SPDX-License-Identifier: Apache-2.0
//
// croqam - conjugate-root OQAM multicarrier waveform simulation library
// Copyright (C) 2026 The croqam authors
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
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <random>

#include "croqam/types.hpp"

namespace croqam {

// Per-trial random streams. A stream is fully determined by
// (base_seed, trial, stream id), so Monte-Carlo results do not depend on
// how trials are split across workers.
enum class Stream : std::uint64_t {
  kPayload = 1,
  kPayload2 = 2,
  kChannel1 = 3,
  kChannel2 = 4,
  kNoise = 5,
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial, Stream stream) {
  return splitmix64(splitmix64(splitmix64(base_seed) ^ trial) ^ static_cast<std::uint64_t>(stream));
}

using Rng = std::mt19937_64;

/// Circularly-symmetric complex Gaussian samples with E|z|^2 = variance.
inline CVector complex_gaussian(Rng& rng, int count, double variance) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = std::sqrt(variance / 2.0);
  CVector out(count);
  for (int i = 0; i < count; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    out[i] = scale * cdouble(re, im);
  }
  return out;
}

}  // namespace croqam
