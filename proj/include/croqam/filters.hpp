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

#include <string>
#include <string_view>

#include "croqam/types.hpp"

namespace croqam {

enum class FilterFamily { kRC, kRRC, kCRRC, kRect };

std::string to_string(FilterFamily family);
FilterFamily parse_filter_family(std::string_view name);

/// Frequency grid of one block: N = K * M bins, one subcarrier spacing F
/// spans M bins. All frequencies are expressed in units of F.
struct FilterGrid {
  int subcarriers = 0;          // K
  int bins_per_subcarrier = 0;  // M

  int n_bins() const { return subcarriers * bins_per_subcarrier; }
  bool even() const { return bins_per_subcarrier % 2 == 0; }

  /// Centered bin l in [-N/2, N/2) for natural DFT index i.
  int centered(int index) const {
    const int n = n_bins();
    return index < (n + 1) / 2 ? index : index - n;
  }
  /// Natural DFT index for centered bin l (any integer, wrapped).
  int index(int centered_bin) const { return wrap(centered_bin, n_bins()); }
  double freq_over_F(int index) const {
    return static_cast<double>(centered(index)) / bins_per_subcarrier;
  }

  friend bool operator==(const FilterGrid&, const FilterGrid&) = default;
};

FilterGrid make_grid(int subcarriers, int bins_per_subcarrier);

/// Whether make_nyquist accepts grids with an odd number of bins per
/// subcarrier. Odd grids place the band edge F/2 between bins; GFDM grids
/// (M subsymbols, often odd) need them.
enum class OddGrid { kReject, kAllow };

/// A prototype pulse sampled on a FilterGrid.
///
/// freq_response is stored in natural DFT order and keeps the analytic
/// scaling (H(0) = 1 for RC). time_response is the inverse DFT scaled to
/// unit energy; it is circularly centered at n = 0.
struct PrototypeFilter {
  FilterFamily family = FilterFamily::kRC;
  double rolloff = 0.0;
  FilterGrid grid;
  CVector freq_response;
  CVector time_response;

  int n_bins() const { return grid.n_bins(); }
  /// Value at centered bin l.
  cdouble at(int centered_bin) const { return freq_response[grid.index(centered_bin)]; }
  /// DFT of the unit-energy time response.
  CVector unit_spectrum() const;
};

/// Raised-cosine value at frequency f (units of F).
double raised_cosine(double f, double rolloff);

PrototypeFilter make_nyquist(FilterFamily family, double rolloff, const FilterGrid& grid,
                             OddGrid odd = OddGrid::kReject);

/// G = sqrt(H), the symmetric half-Nyquist (root) filter.
PrototypeFilter sqrt_nyquist(const PrototypeFilter& h);

/// Conjugate-root filter G^C = H + j sgn(f) sqrt((1 - H) H).
PrototypeFilter conjugate_root(const PrototypeFilter& h);

/// |G|^2 at every bin.
RVector power_response(const PrototypeFilter& g);

/// max over l in [0, M] of |h[l] + h[l - M] - 1|.
double nyquist_residual(const RVector& response, const FilterGrid& grid);
/// Residual of the filter's own frequency response; throws for complex
/// responses (pass power_response() for CR filters).
double nyquist_residual(const PrototypeFilter& h);

/// Inter-carrier interference between subcarriers `shift` apart.
///
/// spectrum[l] = G[l + shift*M] * conj(G[l]) is the spectrum of
/// (g(t) exp(-j 2 pi shift F t)) convolved with g*(-t); time holds its
/// inverse DFT, so time[n] is that correlation evaluated at lag n.
struct IciResponse {
  int shift = 0;
  CVector spectrum;
  CVector time;
};

IciResponse ici_response(const PrototypeFilter& g, int shift);

/// Convenience: build the standard family at (rolloff, grid), i.e. RC / RECT
/// directly, RRC through sqrt_nyquist, CRRC through conjugate_root.
PrototypeFilter make_filter(FilterFamily family, double rolloff, const FilterGrid& grid,
                            OddGrid odd = OddGrid::kReject);

}  // namespace croqam
