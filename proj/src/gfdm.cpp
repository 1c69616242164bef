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

#include "croqam/gfdm.hpp"

#include <cmath>
#include <limits>

#include <Eigen/SVD>
#include <fmt/format.h>

namespace croqam {

std::string to_string(Detector detector) { return detector == Detector::kZF ? "ZF" : "MF"; }

std::string to_string(ModulationMode mode) {
  switch (mode) {
    case ModulationMode::kQAM: return "QAM";
    case ModulationMode::kOQAM: return "OQAM";
    case ModulationMode::kCROQAM: return "CROQAM";
  }
  return "?";
}

Detector parse_detector(std::string_view name) {
  if (name == "ZF") return Detector::kZF;
  if (name == "MF") return Detector::kMF;
  throw Error(fmt::format("unknown detector '{}'", name));
}

ModulationMode parse_modulation_mode(std::string_view name) {
  if (name == "QAM") return ModulationMode::kQAM;
  if (name == "OQAM") return ModulationMode::kOQAM;
  if (name == "CROQAM") return ModulationMode::kCROQAM;
  throw Error(fmt::format("unknown modulation mode '{}'", name));
}

GfdmConfig make_gfdm_config(int subcarriers, int subsymbols, FilterFamily family, double rolloff,
                            Detector detector, ModulationMode mode, int cp_length) {
  GfdmConfig cfg;
  cfg.subcarriers = subcarriers;
  cfg.subsymbols = subsymbols;
  cfg.filter = make_filter(family, rolloff, make_grid(subcarriers, subsymbols), OddGrid::kAllow);
  cfg.detector = detector;
  cfg.mode = mode;
  cfg.cp_length = cp_length;
  return cfg;
}

std::string describe(const GfdmConfig& cfg) {
  return fmt::format("K={}, M={}, {} alpha={}, {}, {}", cfg.subcarriers, cfg.subsymbols,
                     to_string(cfg.filter.family), cfg.filter.rolloff, to_string(cfg.mode),
                     to_string(cfg.detector));
}

double condition_number(const CMatrix& a) {
  Eigen::BDCSVD<CMatrix> svd(a);
  const auto& s = svd.singularValues();
  const double smallest = s.minCoeff();
  if (smallest <= 0.0) return std::numeric_limits<double>::infinity();
  return s.maxCoeff() / smallest;
}

GfdmModem build_modem(const GfdmConfig& cfg) {
  const int k_count = cfg.subcarriers;
  const int m_count = cfg.subsymbols;
  require(k_count > 0 && m_count > 0, "GFDM needs positive K and M");
  require(cfg.filter.grid == make_grid(k_count, m_count),
          fmt::format("filter grid {}x{} does not match K={}, M={}", cfg.filter.grid.subcarriers,
                      cfg.filter.grid.bins_per_subcarrier, k_count, m_count));
  if (is_offset(cfg.mode)) {
    require(k_count % 2 == 0, "offset modulation needs an even subcarrier count");
    require(cfg.detector == Detector::kMF, "offset modulation is detected with the matched filter");
  }
  require(cfg.cp_length >= 0 && cfg.cp_length < cfg.n(), "cp_length must be in [0, N)");
  require(cfg.guard_subsymbols >= 0 && cfg.guard_subsymbols <= m_count,
          "guard_subsymbols must be in [0, M]");

  const int n = cfg.n();
  const CVector& g = cfg.filter.time_response;
  GfdmModem modem;
  modem.config = cfg;
  modem.A.resize(n, n);
  static constexpr cdouble kJPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int m = 0; m < m_count; ++m) {
    for (int k = 0; k < k_count; ++k) {
      const int col = payload_index(k, m, k_count);
      const cdouble rot = cfg.mode == ModulationMode::kOQAM ? kJPowers[k % 4] : cdouble(1.0);
      for (int i = 0; i < n; ++i) {
        const double phase = 2.0 * kPi * static_cast<double>((static_cast<long long>(k) * i) % k_count) /
                             k_count;
        modem.A(i, col) = rot * g[wrap(i - m * k_count, n)] * std::polar(1.0, phase);
      }
    }
  }
  modem.A_mf = modem.A.adjoint();

  if (cfg.detector == Detector::kZF) {
    const double cond = condition_number(modem.A);
    modem.cond_estimate = cond;
    if (!(cond <= kSingularThreshold)) {
      throw Error(fmt::format("ZF detector does not exist for (K={}, M={}, {} alpha={}): "
                              "condition number {:.3g}",
                              k_count, m_count, to_string(cfg.filter.family), cfg.filter.rolloff,
                              cond));
    }
    CMatrix inv = modem.A.partialPivLu().inverse();
    const double err = (inv * modem.A - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > 1e-9) {
      throw Error(fmt::format("ZF inverse inaccurate for ({}): |A^-1 A - I| = {:.3g}",
                              describe(cfg), err));
    }
    modem.A_zf = std::move(inv);
  }
  const CMatrix& det = modem.detector_matrix();
  const double mean_row_energy = det.cwiseAbs2().sum() / n;
  modem.xi_db = 10.0 * std::log10(mean_row_energy);
  return modem;
}

CVector rotate(const CVector& v, int u) {
  const int n = static_cast<int>(v.size());
  CVector out(n);
  for (int i = 0; i < n; ++i) out[i] = v[wrap(static_cast<long long>(i) - u, n)];
  return out;
}

CVector modulate_samples(const CVector& payload, const GfdmModem& modem) {
  const int n = modem.n();
  require(payload.size() == n, fmt::format("payload has {} entries, block needs {}", payload.size(), n));
  if (!is_offset(modem.config.mode)) return modem.A * payload;
  const CVector re = payload.real().cast<cdouble>();
  const CVector im = payload.imag().cast<cdouble>();
  return modem.A * re + kJ * rotate(modem.A * im, modem.config.subcarriers / 2);
}

GfdmBlock modulate(const CVector& payload, const GfdmModem& modem) {
  GfdmBlock block;
  block.payload = payload;
  block.samples = modulate_samples(payload, modem);
  block.with_cp = add_cp(block.samples, modem.config.cp_length);
  return block;
}

CVector detect(const CVector& y, const GfdmModem& modem) {
  const int n = modem.n();
  require(y.size() == n, fmt::format("received block has {} samples, expected {}", y.size(), n));
  const GfdmConfig& cfg = modem.config;
  if (cfg.detector == Detector::kZF) {
    require(modem.A_zf.has_value(), "ZF detection requested on a modem built without A^-1");
    return *modem.A_zf * y;
  }
  if (!is_offset(cfg.mode)) return modem.A_mf * y;
  const CVector re = modem.A_mf * y;
  const CVector im = modem.A_mf * rotate(y, -cfg.subcarriers / 2);
  CVector d(n);
  for (int i = 0; i < n; ++i) d[i] = cdouble(re[i].real(), im[i].imag());
  return d;
}

CVector apply_guard_symbols(const CVector& payload, int n_guard, const GfdmConfig& cfg,
                            bool guard_tail) {
  const int k_count = cfg.subcarriers;
  const int m_count = cfg.subsymbols;
  require(payload.size() == cfg.n(), "payload length does not match the block");
  require(n_guard >= 0, "guard count must be non-negative");
  require(n_guard * k_count <= cfg.n(),
          fmt::format("{} guard subsymbols exceed the block (M={})", n_guard, m_count));
  CVector out = payload;
  out.head(static_cast<Eigen::Index>(n_guard) * k_count).setZero();
  if (guard_tail && m_count > 0) out.tail(k_count).setZero();
  return out;
}

CVector deactivate_edge_subcarriers(const CVector& payload, int per_edge, const GfdmConfig& cfg) {
  const int k_count = cfg.subcarriers;
  require(payload.size() == cfg.n(), "payload length does not match the block");
  require(per_edge >= 0 && 2 * per_edge <= k_count, "too many deactivated edge subcarriers");
  CVector out = payload;
  for (int m = 0; m < cfg.subsymbols; ++m) {
    for (int e = 0; e < per_edge; ++e) {
      out[payload_index(wrap(-k_count / 2 + e, k_count), m, k_count)] = 0.0;
      out[payload_index(wrap(k_count / 2 - 1 - e, k_count), m, k_count)] = 0.0;
    }
  }
  return out;
}

CVector add_cp(const CVector& x, int cp_length) {
  const auto n = x.size();
  require(cp_length >= 0 && cp_length < n, fmt::format("cp_length {} must be in [0, {})", cp_length, n));
  CVector out(n + cp_length);
  out.head(cp_length) = x.tail(cp_length);
  out.tail(n) = x;
  return out;
}

CVector remove_cp(const CVector& y, int cp_length) {
  require(cp_length >= 0 && cp_length < y.size(), "cp_length must be shorter than the block");
  return y.tail(y.size() - cp_length);
}

}  // namespace croqam
