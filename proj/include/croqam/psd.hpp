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
#include <functional>
#include <string>
#include <vector>

#include "croqam/ser.hpp"

namespace croqam {

/// Welch power spectral density on a centered frequency axis.
struct PsdEstimate {
  std::vector<double> freq_norm;  // ascending; cycles/sample times freq_scale
  RVector psd_linear;             // mean over bins equals the mean sample power
  RVector psd_db;                 // 10 log10, peak normalized to 0 dB
  int segment_len = 0;
  int overlap = 0;
  int segments = 0;
  std::string window = "hann";
};

/// Averaged periodograms of Hann-windowed segments. freq_scale converts
/// cycles/sample to the reported unit (K gives subcarrier spacings).
PsdEstimate welch_psd(const CVector& samples, int segment_len, int overlap, double freq_scale = 1.0);

/// Concatenates `n_blocks` blocks from the factory (at least 100) and runs
/// welch_psd on the result.
PsdEstimate estimate_psd(const std::function<CVector(int)>& factory, int n_blocks, int segment_len,
                         int overlap, double freq_scale = 1.0);

/// In-band interval [in_lo, in_hi]; out-of-band is f < oob_lo or f > oob_hi.
struct BandEdges {
  double in_lo = 0.0;
  double in_hi = 0.0;
  double oob_lo = 0.0;
  double oob_hi = 0.0;
};

double inband_mean_db(const PsdEstimate& psd, const BandEdges& edges);
double oob_mean_db(const PsdEstimate& psd, const BandEdges& edges);
/// Mean in-band dB power minus mean out-of-band dB power.
double oob_ratio(const PsdEstimate& psd, const BandEdges& edges);

struct PsdExperiment {
  SystemKind system = SystemKind::kCroqamMf;
  SystemSetup setup;
  int blocks = 400;
  int guard_subsymbols = 1;
  bool guard_tail = false;
  int edge_subcarriers = 8;  // deactivated at each band edge
  double oob_gap = 2.0;      // subcarriers between the band edge and the OOB region
  int segment_len = 1024;
  int overlap = 512;
  std::uint64_t seed = 1;
};

struct PsdResult {
  std::string config_id;
  PsdEstimate psd;  // frequency in subcarrier spacings
  BandEdges edges;
  double inband_db = 0.0;
  double oob_floor_db = 0.0;
  double oob_ratio_db = 0.0;
};

BandEdges allocation_edges(const PsdExperiment& exp);

/// Random 16-QAM GFDM blocks with guard subsymbols and deactivated edge
/// subcarriers, each sent with its cyclic prefix, back to back.
CVector psd_stream(const PsdExperiment& exp);

PsdResult run_psd(const PsdExperiment& exp);

}  // namespace croqam
