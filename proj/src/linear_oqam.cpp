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

#include "croqam/linear_oqam.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "croqam/dft.hpp"

namespace croqam {
namespace {

// (j^k)^phi
cdouble phase_factor(int k, PhaseMode mode) {
  if (mode == PhaseMode::kCR) return 1.0;
  static constexpr cdouble kPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPowers[wrap(k, 4)];
}

CVector causal_pulse(const PrototypeFilter& filter) {
  const int n = filter.n_bins();
  CVector pulse(n);
  for (int i = 0; i < n; ++i) pulse[i] = filter.time_response[wrap(i - n / 2, n)];
  return pulse;
}

}  // namespace

std::string to_string(PhaseMode mode) {
  return mode == PhaseMode::kCR ? "CR" : "CONVENTIONAL";
}

PhaseMode parse_phase_mode(std::string_view name) {
  if (name == "CR" || name == "cr") return PhaseMode::kCR;
  if (name == "CONVENTIONAL" || name == "conventional") return PhaseMode::kConventional;
  throw Error(fmt::format("unknown phase mode '{}'", name));
}

void validate(const OqamBurstConfig& cfg) {
  require(cfg.subcarriers > 0 && cfg.subcarriers % 2 == 0,
          fmt::format("OQAM needs an even subcarrier count, got {}", cfg.subcarriers));
  require(cfg.symbols > 0, "OQAM burst needs at least one symbol");
  require(cfg.filter.grid.subcarriers == cfg.subcarriers,
          "filter grid subcarrier count differs from the burst configuration");
  const FilterFamily fam = cfg.filter.family;
  if (cfg.phase_mode == PhaseMode::kConventional) {
    require(fam == FilterFamily::kRRC || fam == FilterFamily::kRect,
            "conventional OQAM needs a symmetric real pulse (RRC or RECT)");
  } else {
    require(fam == FilterFamily::kCRRC, "CR-OQAM needs a conjugate-root (CRRC) pulse");
  }
}

OqamBurstConfig make_burst_config(int subcarriers, int symbols, FilterFamily family,
                                  double rolloff, int span_periods) {
  OqamBurstConfig cfg;
  cfg.subcarriers = subcarriers;
  cfg.symbols = symbols;
  cfg.phase_mode = family == FilterFamily::kCRRC ? PhaseMode::kCR : PhaseMode::kConventional;
  cfg.filter = make_filter(family, rolloff, make_grid(subcarriers, span_periods));
  validate(cfg);
  return cfg;
}

CVector oqam_modulate(const SymbolGrid& grid, const OqamBurstConfig& cfg) {
  validate(cfg);
  const int k_count = cfg.subcarriers;
  require(grid.subcarriers() == k_count && grid.symbols() == cfg.symbols,
          fmt::format("symbol grid is {}x{}, configuration expects {}x{}", grid.subcarriers(),
                      grid.symbols(), k_count, cfg.symbols));
  const CVector pulse = causal_pulse(cfg.filter);
  const int len = cfg.pulse_length();
  const Dft& transform = dft(k_count);

  CVector x = CVector::Zero(cfg.burst_length());
  CVector coeffs(k_count);
  for (int m = 0; m < cfg.symbols; ++m) {
    for (int branch = 0; branch < 2; ++branch) {
      // u[r] = sum_k c_k phi_k exp(j 2 pi k r / K), periodic in r with period K
      for (int k = 0; k < k_count; ++k) {
        const double c = branch == 0 ? grid.data(k, m).real() : grid.data(k, m).imag();
        coeffs[k] = c * phase_factor(k, cfg.phase_mode);
      }
      const CVector u = transform.inverse(coeffs) * static_cast<double>(k_count);
      const cdouble scale = branch == 0 ? cdouble(1.0) : kJ;
      const int start = m * k_count + branch * (k_count / 2);
      for (int i = 0; i < len; ++i) {
        const int n = start + i;
        x[n] += scale * pulse[i] * u[n % k_count];
      }
    }
  }
  return x;
}

SymbolGrid oqam_demodulate(const CVector& samples, const OqamBurstConfig& cfg) {
  validate(cfg);
  const int k_count = cfg.subcarriers;
  const int len = cfg.pulse_length();
  const int needed = (cfg.symbols - 1) * k_count + k_count / 2 + len;
  require(samples.size() >= needed,
          fmt::format("burst has {} samples, demodulation needs {}", samples.size(), needed));
  const CVector pulse = causal_pulse(cfg.filter);
  const Dft& transform = dft(k_count);

  SymbolGrid out;
  out.data.resize(k_count, cfg.symbols);
  CVector folded(k_count);
  for (int m = 0; m < cfg.symbols; ++m) {
    for (int branch = 0; branch < 2; ++branch) {
      const int start = m * k_count + branch * (k_count / 2);
      folded.setZero();
      for (int i = 0; i < len; ++i) {
        const int n = start + i;
        folded[n % k_count] += samples[n] * std::conj(pulse[i]);
      }
      const CVector z = transform.forward(folded);
      for (int k = 0; k < k_count; ++k) {
        const cdouble v = z[k] * std::conj(phase_factor(k, cfg.phase_mode));
        if (branch == 0) {
          out.data(k, m).real(v.real());
        } else {
          out.data(k, m).imag(v.imag());
        }
      }
    }
  }
  return out;
}

double orthogonality_report(const PrototypeFilter& filter, PhaseMode mode, int span) {
  const int k_count = filter.grid.subcarriers;
  require(k_count % 2 == 0, "orthogonality conditions need an even subcarrier count");
  const int n = filter.n_bins();
  double worst = 0.0;
  for (int kappa = -span; kappa <= span; ++kappa) {
    // R(tau) = sum_n g[n] exp(-j 2 pi kappa n / K) conj(g[n - tau]), circular
    const int shift = std::abs(kappa) <= k_count - 1 ? kappa : wrap(kappa, k_count);
    const CVector corr = ici_response(filter, shift).time;
    const cdouble rot = std::conj(phase_factor(kappa, mode));  // j^{-kappa} or 1
    for (int m = -span; m <= span; ++m) {
      const double delta = (kappa == 0 && m == 0) ? 1.0 : 0.0;
      const cdouble on = rot * corr[wrap(static_cast<long long>(m) * k_count, n)];
      const cdouble half = rot * corr[wrap(static_cast<long long>(m) * k_count + k_count / 2, n)];
      worst = std::max(worst, std::abs(on.real() - delta));      // Re{.}(mT) = delta
      worst = std::max(worst, std::abs((kJ * half).real()));     // Re{j .}((m+1/2)T) = 0
      if (mode == PhaseMode::kConventional) {
        worst = std::max(worst, std::abs(half.imag()));              // Im{.}((m+1/2)T) = 0
        worst = std::max(worst, std::abs((kJ * on).imag() - delta)); // Im{j .}(mT) = delta
      }
    }
  }
  return worst;
}

}  // namespace croqam
