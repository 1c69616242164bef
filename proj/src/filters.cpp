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

#include "croqam/filters.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "croqam/dft.hpp"

namespace croqam {
namespace {

constexpr double kRealTolerance = 1e-12;
constexpr double kBandTolerance = 1e-12;

void finish(PrototypeFilter& f) {
  CVector g = ifft(f.freq_response);
  const double energy = g.squaredNorm();
  require(energy > 0.0, "prototype filter has zero energy");
  f.time_response = g / std::sqrt(energy);
}

void require_real(const PrototypeFilter& h, const char* what) {
  const double max_imag = h.freq_response.imag().cwiseAbs().maxCoeff();
  if (max_imag > kRealTolerance) {
    throw Error(fmt::format("{}: input response is complex (max |imag| = {:.3g})", what, max_imag));
  }
}

}  // namespace

std::string to_string(FilterFamily family) {
  switch (family) {
    case FilterFamily::kRC: return "RC";
    case FilterFamily::kRRC: return "RRC";
    case FilterFamily::kCRRC: return "CRRC";
    case FilterFamily::kRect: return "RECT";
  }
  return "?";
}

FilterFamily parse_filter_family(std::string_view name) {
  if (name == "RC") return FilterFamily::kRC;
  if (name == "RRC") return FilterFamily::kRRC;
  if (name == "CRRC") return FilterFamily::kCRRC;
  if (name == "RECT") return FilterFamily::kRect;
  throw Error(fmt::format("unknown filter family '{}'", name));
}

FilterGrid make_grid(int subcarriers, int bins_per_subcarrier) {
  require(subcarriers > 0, "grid needs at least one subcarrier");
  require(bins_per_subcarrier > 0, "grid needs at least one bin per subcarrier");
  return FilterGrid{subcarriers, bins_per_subcarrier};
}

CVector PrototypeFilter::unit_spectrum() const { return fft(time_response); }

double raised_cosine(double f, double rolloff) {
  const double a = std::abs(f);
  if (rolloff == 0.0) {
    if (a < 0.5) return 1.0;
    return a == 0.5 ? 0.5 : 0.0;
  }
  const double flat = (1.0 - rolloff) / 2.0;
  const double stop = (1.0 + rolloff) / 2.0;
  if (a <= flat) return 1.0;
  if (a >= stop) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi / rolloff * (a - flat)));
}

PrototypeFilter make_nyquist(FilterFamily family, double rolloff, const FilterGrid& grid,
                             OddGrid odd) {
  require(family == FilterFamily::kRC || family == FilterFamily::kRect,
          "make_nyquist builds RC or RECT responses only");
  require(grid.subcarriers > 0 && grid.bins_per_subcarrier > 0, "invalid filter grid");
  if (family == FilterFamily::kRect) rolloff = 0.0;
  if (!(rolloff >= 0.0 && rolloff <= 1.0)) {
    throw Error(fmt::format("rolloff {} outside [0, 1]", rolloff));
  }
  if (!grid.even() && odd == OddGrid::kReject) {
    throw Error(fmt::format("odd bins_per_subcarrier ({}) puts the band edge F/2 off-grid",
                            grid.bins_per_subcarrier));
  }
  PrototypeFilter h;
  h.family = family;
  h.rolloff = rolloff;
  h.grid = grid;
  const int n = grid.n_bins();
  h.freq_response.resize(n);
  for (int i = 0; i < n; ++i) h.freq_response[i] = raised_cosine(grid.freq_over_F(i), rolloff);
  finish(h);
  return h;
}

PrototypeFilter sqrt_nyquist(const PrototypeFilter& h) {
  require(h.family == FilterFamily::kRC || h.family == FilterFamily::kRect,
          "sqrt_nyquist expects an RC or RECT response");
  require_real(h, "sqrt_nyquist");
  if (h.freq_response.real().minCoeff() < -kRealTolerance) {
    throw Error("sqrt_nyquist: input response has negative values");
  }
  PrototypeFilter g = h;
  g.family = h.family == FilterFamily::kRect ? FilterFamily::kRect : FilterFamily::kRRC;
  for (Eigen::Index i = 0; i < g.freq_response.size(); ++i) {
    g.freq_response[i] = std::sqrt(std::max(0.0, h.freq_response[i].real()));
  }
  finish(g);
  return g;
}

PrototypeFilter conjugate_root(const PrototypeFilter& h) {
  require_real(h, "conjugate_root");
  const FilterGrid& grid = h.grid;
  const int n = grid.n_bins();
  const int m = grid.bins_per_subcarrier;
  for (int i = 0; i < n; ++i) {
    if (std::abs(grid.centered(i)) >= m && std::abs(h.freq_response[i]) >= kBandTolerance) {
      throw Error(fmt::format("conjugate_root: response not band-limited to |f| < F (bin {})",
                              grid.centered(i)));
    }
  }
  PrototypeFilter g = h;
  g.family = FilterFamily::kCRRC;
  for (int i = 0; i < n; ++i) {
    const double v = std::clamp(h.freq_response[i].real(), 0.0, 1.0);
    const double quad = std::sqrt((1.0 - v) * v);
    const double sign = grid.centered(i) >= 0 ? 1.0 : -1.0;
    g.freq_response[i] = cdouble(v, sign * quad);
  }
  finish(g);
  return g;
}

RVector power_response(const PrototypeFilter& g) { return g.freq_response.cwiseAbs2(); }

double nyquist_residual(const RVector& response, const FilterGrid& grid) {
  require(response.size() == grid.n_bins(), "response length does not match grid");
  const int m = grid.bins_per_subcarrier;
  double worst = 0.0;
  for (int l = 0; l <= m; ++l) {
    const double sum = response[grid.index(l)] + response[grid.index(l - m)];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double nyquist_residual(const PrototypeFilter& h) {
  require_real(h, "nyquist_residual");
  return nyquist_residual(RVector(h.freq_response.real()), h.grid);
}

IciResponse ici_response(const PrototypeFilter& g, int shift) {
  const int k = g.grid.subcarriers;
  require(std::abs(shift) <= k - 1, fmt::format("ICI shift {} exceeds K-1 = {}", shift, k - 1));
  const CVector spec = g.unit_spectrum();
  const int n = g.n_bins();
  const int offset = shift * g.grid.bins_per_subcarrier;
  IciResponse out;
  out.shift = shift;
  out.spectrum.resize(n);
  for (int i = 0; i < n; ++i) out.spectrum[i] = spec[wrap(i + offset, n)] * std::conj(spec[i]);
  out.time = ifft(out.spectrum);
  return out;
}

PrototypeFilter make_filter(FilterFamily family, double rolloff, const FilterGrid& grid,
                            OddGrid odd) {
  switch (family) {
    case FilterFamily::kRC: return make_nyquist(FilterFamily::kRC, rolloff, grid, odd);
    case FilterFamily::kRect: return make_nyquist(FilterFamily::kRect, 0.0, grid, odd);
    case FilterFamily::kRRC: return sqrt_nyquist(make_nyquist(FilterFamily::kRC, rolloff, grid, odd));
    case FilterFamily::kCRRC:
      return conjugate_root(make_nyquist(FilterFamily::kRC, rolloff, grid, odd));
  }
  throw Error("unknown filter family");
}

}  // namespace croqam
