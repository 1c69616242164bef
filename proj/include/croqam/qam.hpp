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

#include <array>
#include <cstdint>
#include <vector>

#include "croqam/rng.hpp"
#include "croqam/types.hpp"

namespace croqam {

/// Gray-labeled square 16-QAM with unit average energy.
///
/// Label bits b3 b2 select the in-phase level and b1 b0 the quadrature
/// level; per axis the Gray order 00, 01, 11, 10 maps to -3, -1, +1, +3
/// (scaled by 1/sqrt(10)).
class QamMapper {
 public:
  static constexpr int kOrder = 16;

  QamMapper();

  const std::array<cdouble, kOrder>& constellation() const { return points_; }
  cdouble point(int index) const { return points_[static_cast<std::size_t>(index)]; }
  double min_distance() const { return 2.0 / std::sqrt(10.0); }

  CVector map(const std::vector<int>& indices) const;
  std::vector<int> random_indices(Rng& rng, int count) const;

  /// Minimum-distance decision (per-axis slicing, exact for a square grid).
  int demap(cdouble symbol) const;
  std::vector<int> demap(const CVector& symbols) const;

 private:
  std::array<cdouble, kOrder> points_;
  std::array<int, 4> level_to_bits_;  // level index (-3,-1,1,3) -> 2-bit Gray label
};

/// Shared instance.
const QamMapper& qam16();

}  // namespace croqam
