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

#include "croqam/types.hpp"

namespace croqam {

/// Linear tap powers p_i summing to one.
struct PowerDelayProfile {
  RVector taps;
  int length() const { return static_cast<int>(taps.size()); }
};

/// Taps decaying linearly in dB from 0 dB to -span_db over `length` taps,
/// normalized to unit total power. Defaults: 16 taps, 0 dB to -16 dB.
PowerDelayProfile make_pdp(int length = 16, double span_db = 16.0);

struct ChannelRealization {
  CVector taps;  // h
  CVector freq;  // DFT of h zero-padded to the block length
};

/// h_i = sqrt(p_i / 2) (n1 + j n2) with standard normal n1, n2 drawn from a
/// generator seeded with `seed`; freq has n_bins entries.
ChannelRealization draw_channel(const PowerDelayProfile& pdp, std::uint64_t seed, int n_bins);

/// Frequency response of arbitrary taps on an n_bins DFT grid.
CVector channel_frequency_response(const CVector& taps, int n_bins);

/// Linear convolution of a CP-framed block with h, truncated to the input
/// length. The block is sent in isolation (no spill-over from neighbors).
CVector convolve_block(const CVector& x_with_cp, const CVector& taps);

/// convolve_block plus complex AWGN of variance noise_var per sample.
CVector transmit(const CVector& x_with_cp, const CVector& taps, double noise_var,
                 std::uint64_t seed, int cp_length);

/// Magnitudes below this are treated as spectral nulls.
inline constexpr double kNullThreshold = 1e-12;

bool has_null(const CVector& freq);

/// Per-bin zero-forcing: IDFT(DFT(y) / H).
CVector fde_equalize(const CVector& y, const CVector& freq);

/// Time-reversal space-time coded pair of blocks (2 transmit antennas,
/// two time slots). Each antenna stream is scaled by 1/sqrt(2) so the
/// total transmit power matches one antenna sending both blocks.
struct StcBlockPair {
  CVector x1, x2;
  CVector a1_t1, a2_t1;  // slot 1: x1, x2
  CVector a1_t2, a2_t2;  // slot 2: -conj(rev x2), conj(rev x1)
};

/// v[(-n) mod N]
CVector circ_reverse(const CVector& v);

StcBlockPair trstc_encode(const CVector& x1, const CVector& x2);

struct DecodedPair {
  CVector x1;
  CVector x2;
};

/// Per-bin Alamouti combining of the two received slots (CP removed).
DecodedPair trstc_decode(const CVector& y1, const CVector& y2, const CVector& h1_freq,
                         const CVector& h2_freq);

}  // namespace croqam
