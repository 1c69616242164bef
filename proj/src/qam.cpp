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

#include "croqam/qam.hpp"

#include <cmath>

namespace croqam {
namespace {

constexpr std::array<int, 4> kGrayToLevel = {0, 1, 3, 2};  // bits 00,01,10,11 -> level index
constexpr std::array<double, 4> kLevels = {-3.0, -1.0, 1.0, 3.0};

int slice(double v) {
  const double s = v * std::sqrt(10.0);
  if (s < -2.0) return 0;
  if (s < 0.0) return 1;
  if (s < 2.0) return 2;
  return 3;
}

}  // namespace

QamMapper::QamMapper() {
  const double scale = 1.0 / std::sqrt(10.0);
  for (int bits = 0; bits < 4; ++bits) level_to_bits_[static_cast<std::size_t>(kGrayToLevel[static_cast<std::size_t>(bits)])] = bits;
  for (int index = 0; index < kOrder; ++index) {
    const int i_level = kGrayToLevel[static_cast<std::size_t>(index >> 2)];
    const int q_level = kGrayToLevel[static_cast<std::size_t>(index & 3)];
    points_[static_cast<std::size_t>(index)] =
        scale * cdouble(kLevels[static_cast<std::size_t>(i_level)], kLevels[static_cast<std::size_t>(q_level)]);
  }
}

CVector QamMapper::map(const std::vector<int>& indices) const {
  CVector out(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t i = 0; i < indices.size(); ++i) {
    require(indices[i] >= 0 && indices[i] < kOrder, "16-QAM index out of range");
    out[static_cast<Eigen::Index>(i)] = points_[static_cast<std::size_t>(indices[i])];
  }
  return out;
}

std::vector<int> QamMapper::random_indices(Rng& rng, int count) const {
  require(count >= 1, "need at least one symbol");
  std::vector<int> out(static_cast<std::size_t>(count));
  // 4 bits per symbol from 64-bit draws; uniform and independent of the
  // standard library's distribution implementations.
  std::uint64_t word = 0;
  int left = 0;
  for (auto& v : out) {
    if (left == 0) {
      word = rng();
      left = 16;
    }
    v = static_cast<int>(word & 15U);
    word >>= 4;
    --left;
  }
  return out;
}

int QamMapper::demap(cdouble symbol) const {
  const int i_bits = level_to_bits_[static_cast<std::size_t>(slice(symbol.real()))];
  const int q_bits = level_to_bits_[static_cast<std::size_t>(slice(symbol.imag()))];
  return (i_bits << 2) | q_bits;
}

std::vector<int> QamMapper::demap(const CVector& symbols) const {
  std::vector<int> out(static_cast<std::size_t>(symbols.size()));
  for (Eigen::Index i = 0; i < symbols.size(); ++i) out[static_cast<std::size_t>(i)] = demap(symbols[i]);
  return out;
}

const QamMapper& qam16() {
  static const QamMapper mapper;
  return mapper;
}

}  // namespace croqam
