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

#include "croqam/channel.hpp"

#include <cmath>

#include <fmt/format.h>

#include "croqam/dft.hpp"
#include "croqam/rng.hpp"

namespace croqam {

PowerDelayProfile make_pdp(int length, double span_db) {
  require(length >= 1, "power delay profile needs at least one tap");
  PowerDelayProfile pdp;
  pdp.taps.resize(length);
  for (int i = 0; i < length; ++i) {
    const double db = length == 1 ? 0.0 : -span_db * i / (length - 1);
    pdp.taps[i] = std::pow(10.0, db / 10.0);
  }
  pdp.taps /= pdp.taps.sum();
  return pdp;
}

CVector channel_frequency_response(const CVector& taps, int n_bins) {
  require(taps.size() <= n_bins, "channel longer than the DFT grid");
  CVector padded = CVector::Zero(n_bins);
  padded.head(taps.size()) = taps;
  return fft(padded);
}

ChannelRealization draw_channel(const PowerDelayProfile& pdp, std::uint64_t seed, int n_bins) {
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ChannelRealization ch;
  ch.taps.resize(pdp.length());
  for (int i = 0; i < pdp.length(); ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    ch.taps[i] = std::sqrt(pdp.taps[i] / 2.0) * cdouble(re, im);
  }
  ch.freq = channel_frequency_response(ch.taps, n_bins);
  return ch;
}

CVector convolve_block(const CVector& x, const CVector& taps) {
  const auto len = x.size();
  CVector y = CVector::Zero(len);
  for (Eigen::Index i = 0; i < taps.size(); ++i) {
    if (taps[i] == cdouble(0.0)) continue;
    y.tail(len - i) += taps[i] * x.head(len - i);
  }
  return y;
}

CVector transmit(const CVector& x_with_cp, const CVector& taps, double noise_var,
                 std::uint64_t seed, int cp_length) {
  require(cp_length >= taps.size() - 1,
          fmt::format("cyclic prefix ({}) shorter than the channel memory ({})", cp_length,
                      taps.size() - 1));
  require(noise_var >= 0.0, "noise variance must be non-negative");
  CVector y = convolve_block(x_with_cp, taps);
  if (noise_var > 0.0) {
    Rng rng(seed);
    y += complex_gaussian(rng, static_cast<int>(y.size()), noise_var);
  }
  return y;
}

bool has_null(const CVector& freq) { return freq.cwiseAbs().minCoeff() < kNullThreshold; }

CVector fde_equalize(const CVector& y, const CVector& freq) {
  require(y.size() == freq.size(), "equalizer length mismatch");
  if (has_null(freq)) throw Error("channel has a spectral null; ZF equalization undefined");
  return ifft(fft(y).cwiseQuotient(freq));
}

CVector circ_reverse(const CVector& v) {
  const int n = static_cast<int>(v.size());
  CVector out(n);
  for (int i = 0; i < n; ++i) out[i] = v[wrap(-i, n)];
  return out;
}

StcBlockPair trstc_encode(const CVector& x1, const CVector& x2) {
  require(x1.size() == x2.size(), "TR-STC blocks must have equal length");
  const double s = 1.0 / std::sqrt(2.0);
  StcBlockPair p;
  p.x1 = x1;
  p.x2 = x2;
  p.a1_t1 = s * x1;
  p.a2_t1 = s * x2;
  p.a1_t2 = -s * circ_reverse(x2).conjugate();
  p.a2_t2 = s * circ_reverse(x1).conjugate();
  return p;
}

DecodedPair trstc_decode(const CVector& y1, const CVector& y2, const CVector& h1_freq,
                         const CVector& h2_freq) {
  const auto n = y1.size();
  require(y2.size() == n && h1_freq.size() == n && h2_freq.size() == n,
          "TR-STC decoder length mismatch");
  const CVector Y1 = fft(y1);
  const CVector Y2 = fft(y2);
  CVector X1(n), X2(n);
  for (Eigen::Index l = 0; l < n; ++l) {
    const cdouble h1 = h1_freq[l];
    const cdouble h2 = h2_freq[l];
    const double gain = std::norm(h1) + std::norm(h2);
    if (std::abs(h1) < kNullThreshold && std::abs(h2) < kNullThreshold) {
      throw Error(fmt::format("both antenna channels vanish at bin {}", l));
    }
    const cdouble y2c = std::conj(Y2[l]);
    X1[l] = (std::conj(h1) * Y1[l] + h2 * y2c) / gain;
    X2[l] = (std::conj(h2) * Y1[l] - h1 * y2c) / gain;
  }
  const double s = std::sqrt(2.0);
  return DecodedPair{s * ifft(X1), s * ifft(X2)};
}

}  // namespace croqam
