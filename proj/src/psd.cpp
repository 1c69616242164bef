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

#include "croqam/psd.hpp"

#include <cmath>

#include <fmt/format.h>

#include "croqam/dft.hpp"
#include "croqam/qam.hpp"
#include "croqam/rng.hpp"

namespace croqam {

PsdEstimate welch_psd(const CVector& samples, int segment_len, int overlap, double freq_scale) {
  require(segment_len > 1, "PSD segment length must exceed one sample");
  require(overlap >= 0 && overlap < segment_len, "PSD overlap must be in [0, segment_len)");
  require(samples.size() >= segment_len,
          fmt::format("signal ({} samples) shorter than one PSD segment ({})", samples.size(),
                      segment_len));
  const int step = segment_len - overlap;
  const int segments = static_cast<int>((samples.size() - segment_len) / step) + 1;

  RVector window(segment_len);
  for (int i = 0; i < segment_len; ++i) {
    window[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / segment_len));  // periodic Hann
  }
  const double window_energy = window.squaredNorm();

  const Dft& transform = dft(segment_len);
  RVector acc = RVector::Zero(segment_len);
  CVector seg(segment_len);
  for (int s = 0; s < segments; ++s) {
    const auto start = static_cast<Eigen::Index>(s) * step;
    seg = samples.segment(start, segment_len).cwiseProduct(window.cast<cdouble>());
    acc += transform.forward(seg).cwiseAbs2();
  }
  acc /= segments * window_energy;

  PsdEstimate out;
  out.segment_len = segment_len;
  out.overlap = overlap;
  out.segments = segments;
  out.psd_linear.resize(segment_len);
  out.freq_norm.resize(static_cast<std::size_t>(segment_len));
  // reorder to ascending frequency, bin -L/2 first
  for (int i = 0; i < segment_len; ++i) {
    const int centered = i - segment_len / 2;
    out.psd_linear[i] = acc[wrap(centered, segment_len)];
    out.freq_norm[static_cast<std::size_t>(i)] = freq_scale * centered / segment_len;
  }
  const double peak = out.psd_linear.maxCoeff();
  require(peak > 0.0, "PSD of an all-zero signal");
  out.psd_db = (out.psd_linear / peak).unaryExpr([](double v) {
    return 10.0 * std::log10(std::max(v, 1e-300));
  });
  return out;
}

PsdEstimate estimate_psd(const std::function<CVector(int)>& factory, int n_blocks, int segment_len,
                         int overlap, double freq_scale) {
  require(n_blocks >= 100, "PSD estimation needs at least 100 independent blocks");
  std::vector<CVector> blocks;
  Eigen::Index total = 0;
  for (int b = 0; b < n_blocks; ++b) {
    blocks.push_back(factory(b));
    total += blocks.back().size();
  }
  CVector stream(total);
  Eigen::Index pos = 0;
  for (const auto& b : blocks) {
    stream.segment(pos, b.size()) = b;
    pos += b.size();
  }
  return welch_psd(stream, segment_len, overlap, freq_scale);
}

namespace {

double mean_db_where(const PsdEstimate& psd, const std::function<bool(double)>& in_region,
                     const char* what) {
  double sum = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < psd.freq_norm.size(); ++i) {
    if (in_region(psd.freq_norm[i])) {
      sum += psd.psd_db[static_cast<Eigen::Index>(i)];
      ++count;
    }
  }
  if (count == 0) throw Error(fmt::format("{} region contains no PSD bins", what));
  return sum / count;
}

}  // namespace

double inband_mean_db(const PsdEstimate& psd, const BandEdges& e) {
  return mean_db_where(psd, [&](double f) { return f >= e.in_lo && f <= e.in_hi; }, "in-band");
}

double oob_mean_db(const PsdEstimate& psd, const BandEdges& e) {
  return mean_db_where(psd, [&](double f) { return f < e.oob_lo || f > e.oob_hi; }, "out-of-band");
}

double oob_ratio(const PsdEstimate& psd, const BandEdges& edges) {
  require(edges.in_lo <= edges.in_hi && edges.oob_lo <= edges.oob_hi, "band edges out of order");
  return inband_mean_db(psd, edges) - oob_mean_db(psd, edges);
}

BandEdges allocation_edges(const PsdExperiment& exp) {
  const double half = exp.setup.subcarriers / 2.0;
  BandEdges e;
  e.in_lo = -half + exp.edge_subcarriers - 0.5;
  e.in_hi = half - exp.edge_subcarriers - 0.5;
  e.oob_lo = e.in_lo - exp.oob_gap;
  e.oob_hi = e.in_hi + exp.oob_gap;
  return e;
}

CVector psd_stream(const PsdExperiment& exp) {
  require(exp.blocks >= 1, "PSD stream needs at least one block");
  const GfdmModem modem = build_modem(system_config(exp.system, exp.setup));
  const GfdmConfig& cfg = modem.config;
  const int n = cfg.n();
  const int cp = cfg.cp_length;
  const QamMapper& mapper = qam16();
  CVector stream(static_cast<Eigen::Index>(exp.blocks) * (n + cp));
  for (int b = 0; b < exp.blocks; ++b) {
    Rng rng(derive_seed(exp.seed, static_cast<std::uint64_t>(b), Stream::kPayload));
    CVector d = mapper.map(mapper.random_indices(rng, n));
    d = deactivate_edge_subcarriers(d, exp.edge_subcarriers, cfg);
    d = apply_guard_symbols(d, exp.guard_subsymbols, cfg, exp.guard_tail);
    stream.segment(static_cast<Eigen::Index>(b) * (n + cp), n + cp) = add_cp(modulate_samples(d, modem), cp);
  }
  return stream;
}

PsdResult run_psd(const PsdExperiment& exp) {
  require(exp.blocks >= 100, "PSD estimation needs at least 100 independent blocks");
  PsdResult r;
  r.config_id = to_string(exp.system);
  r.psd = welch_psd(psd_stream(exp), exp.segment_len, exp.overlap, exp.setup.subcarriers);
  r.edges = allocation_edges(exp);
  r.inband_db = inband_mean_db(r.psd, r.edges);
  r.oob_floor_db = oob_mean_db(r.psd, r.edges);
  r.oob_ratio_db = r.inband_db - r.oob_floor_db;
  return r;
}

}  // namespace croqam
