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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "croqam/gfdm.hpp"

namespace croqam {

/// The three GFDM systems compared in the SER experiments.
///   QAM-ZF:    RC alpha=0.5, complex QAM, zero-forcing
///   OQAM-MF:   RRC alpha=1, j^k-folded offset QAM, matched filter
///   CROQAM-MF: CRRC alpha=1, conjugate-root offset QAM, matched filter
enum class SystemKind { kQamZf, kOqamMf, kCroqamMf };

struct SerConfigId {
  SystemKind system = SystemKind::kCroqamMf;
  bool trstc = false;

  friend bool operator==(const SerConfigId&, const SerConfigId&) = default;
};

std::string to_string(SystemKind system);
std::string to_string(const SerConfigId& id);
/// Accepts "QAM-ZF", "OQAM-MF", "CROQAM-MF", each optionally suffixed "-TRSTC".
SerConfigId parse_ser_config_id(std::string_view name);
std::vector<SerConfigId> all_ser_configs();

/// Block and channel dimensions shared by the experiments.
struct SystemSetup {
  int subcarriers = 64;
  int subsymbols = 7;
  int cp_length = 16;
  int pdp_length = 16;
  double pdp_span_db = 16.0;
};

GfdmConfig system_config(SystemKind system, const SystemSetup& setup = {});

struct SerOptions {
  std::vector<double> snr_db;  // Es/N0 per QAM symbol
  int trials = 0;              // channel realizations (block or block pair each)
  std::uint64_t base_seed = 1;
  int workers = 1;
  SystemSetup setup;
  bool keep_per_trial = false;
};

/// Points with fewer errors than this are flagged low-confidence.
inline constexpr double kMinErrorsPerPoint = 100.0;

struct SerCurve {
  std::string config_id;
  std::vector<double> snr_db;
  std::vector<double> ser;
  std::vector<double> errors;  // counted (Monte Carlo) or expected (theory)
  std::int64_t decisions = 0;  // per SNR point
  int trials = 0;
  bool theory = false;
  std::vector<std::string> flags;
  /// trials x points, row-major; filled when SerOptions::keep_per_trial.
  std::vector<double> per_trial;

  std::size_t points() const { return snr_db.size(); }
};

/// Monte-Carlo symbol error rate. Every trial draws payload, channel(s) and
/// noise from streams derived from (base_seed, trial), and reuses the same
/// noise shape across SNR points, so curves are smooth and independent of
/// the worker count.
SerCurve run_ser(const SerConfigId& id, const SerOptions& opts);

/// Semi-analytic reference: exact post-detection noise covariance of every
/// symbol (variance and, for offset modes, I/Q correlation) for the same
/// channel draws as run_ser, mapped through the 16-QAM error probability and
/// averaged.
SerCurve semi_analytic_ser(const SerConfigId& id, const SerOptions& opts);

/// 16-QAM symbol error probability at post-detection SNR gamma (linear).
double qam16_ser(double gamma);

/// 16-QAM symbol error probability when the in-phase and quadrature noise
/// components have equal variance and correlation rho, averaged over the
/// constellation. Construction depends on rho only, so one evaluator serves
/// every SNR point of a symbol.
class CorrelatedQam16 {
 public:
  explicit CorrelatedQam16(double rho);
  double ser(double gamma) const;
  double rho() const { return rho_; }

 private:
  double rho_;
  double scale_ = 0.0;              // asin(rho) / (4 pi)
  std::vector<double> weight_;      // Gauss-Legendre weights, one per node
  std::vector<double> same_side_;   // 1 / (1 + sin theta_i)
  std::vector<double> other_side_;  // 1 / (1 - sin theta_i)
};

/// Single-shot form of CorrelatedQam16; equals qam16_ser(gamma) at rho = 0.
double qam16_ser(double gamma, double rho);

struct OracleComparison {
  std::vector<double> sigma;    // Monte-Carlo counting error of the SER, per point
  std::vector<double> z_score;  // (mc - theory) / sigma
  double max_abs_z = 0.0;
  bool within(double k) const { return max_abs_z <= k; }
};

/// Compares a Monte-Carlo curve with the semi-analytic curve for the same
/// channels. sigma is estimated from per-trial residuals (errors minus
/// expected errors), which accounts for errors clustering within a block.
OracleComparison compare_to_oracle(const SerCurve& mc, const SerCurve& theory);

/// SNR where the curve first falls to `target`, by linear interpolation of
/// log10(SER) between neighbouring points.
std::optional<double> snr_at_ser(const SerCurve& curve, double target);

/// Largest increase of SER from one point to the next (0 for monotone curves).
double max_ser_increase(const SerCurve& curve);

}  // namespace croqam
