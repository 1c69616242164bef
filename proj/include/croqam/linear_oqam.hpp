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

#include "croqam/filters.hpp"

namespace croqam {

/// CONVENTIONAL keeps the j^k phase factor between subcarriers (phi = 1);
/// CR drops it (phi = 0) and pairs with conjugate-root pulses.
enum class PhaseMode { kConventional, kCR };

std::string to_string(PhaseMode mode);
PhaseMode parse_phase_mode(std::string_view name);

/// Default pulse span (in symbol periods) for linear bursts.
inline constexpr int kDefaultSpanPeriods = 512;

/// Burst-mode OFDM/OQAM configuration. The pulse is the filter's full
/// time response (K * span samples), made causal by a half-span delay.
struct OqamBurstConfig {
  int subcarriers = 0;  // K, samples per symbol period
  int symbols = 0;      // QAM symbols per subcarrier in the burst
  PhaseMode phase_mode = PhaseMode::kCR;
  PrototypeFilter filter;

  int pulse_length() const { return filter.n_bins(); }
  /// Number of output samples produced by oqam_modulate.
  int burst_length() const { return symbols * subcarriers + pulse_length(); }
};

/// Checks the invariants of OqamBurstConfig; throws Error on violation.
void validate(const OqamBurstConfig& cfg);

/// Convenience constructor: filter family/rolloff on a K x span grid,
/// phase mode chosen from the family (CRRC -> CR, otherwise conventional).
OqamBurstConfig make_burst_config(int subcarriers, int symbols, FilterFamily family,
                                  double rolloff, int span_periods = kDefaultSpanPeriods);

/// K x symbols array of complex data symbols c_{k,m} (rows are subcarriers).
struct SymbolGrid {
  CMatrix data;

  int subcarriers() const { return static_cast<int>(data.rows()); }
  int symbols() const { return static_cast<int>(data.cols()); }
  RMatrix real_part() const { return data.real(); }
  RMatrix imag_part() const { return data.imag(); }
};

CVector oqam_modulate(const SymbolGrid& grid, const OqamBurstConfig& cfg);
SymbolGrid oqam_demodulate(const CVector& samples, const OqamBurstConfig& cfg);

/// Maximum absolute violation of the discrete orthogonality conditions for
/// subcarrier offsets and symbol lags in [-span, span]. Conventional mode
/// checks the four j^k-shifted conditions, CR mode the two CR conditions.
/// Correlations are circular on the filter's own grid.
double orthogonality_report(const PrototypeFilter& filter, PhaseMode mode, int span = 2);

}  // namespace croqam
