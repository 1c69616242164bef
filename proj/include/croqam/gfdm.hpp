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

#include <optional>
#include <string>
#include <string_view>

#include "croqam/filters.hpp"

namespace croqam {

enum class Detector { kZF, kMF };

/// QAM transmits complex symbols through A. OQAM and CROQAM split each
/// symbol into a real branch and a K/2-rotated imaginary branch; OQAM
/// additionally scales column (k, m) of A by j^k.
enum class ModulationMode { kQAM, kOQAM, kCROQAM };

std::string to_string(Detector detector);
std::string to_string(ModulationMode mode);
Detector parse_detector(std::string_view name);
ModulationMode parse_modulation_mode(std::string_view name);

inline bool is_offset(ModulationMode mode) { return mode != ModulationMode::kQAM; }

/// Condition numbers above this make the ZF detector unusable.
inline constexpr double kSingularThreshold = 1e9;

struct GfdmConfig {
  int subcarriers = 0;  // K
  int subsymbols = 0;   // M
  PrototypeFilter filter;  // on the K x M grid
  Detector detector = Detector::kMF;
  ModulationMode mode = ModulationMode::kQAM;
  int cp_length = 16;
  int guard_subsymbols = 0;

  int n() const { return subcarriers * subsymbols; }
};

/// Builds the filter on the K x M grid (odd M allowed) and fills a config.
GfdmConfig make_gfdm_config(int subcarriers, int subsymbols, FilterFamily family, double rolloff,
                            Detector detector, ModulationMode mode, int cp_length = 16);

std::string describe(const GfdmConfig& cfg);

/// Immutable after build_modem; safe to share between threads.
struct GfdmModem {
  GfdmConfig config;
  CMatrix A;                    // N x N modulation matrix
  std::optional<CMatrix> A_zf;  // inverse of A, ZF detector only
  CMatrix A_mf;                 // A^H
  double xi_db = 0.0;           // noise enhancement of the detector
  std::optional<double> cond_estimate;  // 2-norm condition number (ZF builds)

  int n() const { return config.n(); }
  /// Detection matrix applied to the received block (A_zf or A_mf).
  const CMatrix& detector_matrix() const { return A_zf ? *A_zf : A_mf; }
};

GfdmModem build_modem(const GfdmConfig& cfg);

/// 2-norm condition number of A from its singular values.
double condition_number(const CMatrix& a);

/// Payload position of subcarrier k in subsymbol m (subsymbol-major).
inline int payload_index(int k, int m, int subcarriers) { return m * subcarriers + k; }

/// Circular rotation: out[n] = v[(n - u) mod N].
CVector rotate(const CVector& v, int u);

struct GfdmBlock {
  CVector payload;
  CVector samples;
  CVector with_cp;
};

GfdmBlock modulate(const CVector& payload, const GfdmModem& modem);
/// Transmit samples only (no CP copy); used on hot paths.
CVector modulate_samples(const CVector& payload, const GfdmModem& modem);

CVector detect(const CVector& y_equalized, const GfdmModem& modem);

/// Zeroes the first n_guard subsymbols (and the last one when guard_tail).
CVector apply_guard_symbols(const CVector& payload, int n_guard, const GfdmConfig& cfg,
                            bool guard_tail = false);

/// Zeroes `per_edge` subcarriers at each edge of the band in centered
/// order, i.e. centered indices [-K/2, -K/2 + per_edge) and [K/2 - per_edge, K/2).
CVector deactivate_edge_subcarriers(const CVector& payload, int per_edge, const GfdmConfig& cfg);

CVector add_cp(const CVector& x, int cp_length);
CVector remove_cp(const CVector& y, int cp_length);

}  // namespace croqam
