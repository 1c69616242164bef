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

#include "croqam/ser.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/owens_t.hpp>

#include <cmath>

#include <fmt/format.h>

#include "croqam/channel.hpp"
#include "croqam/dft.hpp"
#include "croqam/parallel.hpp"
#include "croqam/qam.hpp"
#include "croqam/rng.hpp"

namespace croqam {

std::string to_string(SystemKind system) {
  switch (system) {
    case SystemKind::kQamZf: return "QAM-ZF";
    case SystemKind::kOqamMf: return "OQAM-MF";
    case SystemKind::kCroqamMf: return "CROQAM-MF";
  }
  return "?";
}

std::string to_string(const SerConfigId& id) {
  return id.trstc ? to_string(id.system) + "-TRSTC" : to_string(id.system);
}

SerConfigId parse_ser_config_id(std::string_view name) {
  SerConfigId id;
  constexpr std::string_view kSuffix = "-TRSTC";
  std::string_view base = name;
  if (base.size() > kSuffix.size() && base.substr(base.size() - kSuffix.size()) == kSuffix) {
    id.trstc = true;
    base.remove_suffix(kSuffix.size());
  }
  if (base == "QAM-ZF") {
    id.system = SystemKind::kQamZf;
  } else if (base == "OQAM-MF") {
    id.system = SystemKind::kOqamMf;
  } else if (base == "CROQAM-MF") {
    id.system = SystemKind::kCroqamMf;
  } else {
    throw Error(fmt::format("unknown SER configuration '{}'", name));
  }
  return id;
}

std::vector<SerConfigId> all_ser_configs() {
  std::vector<SerConfigId> out;
  for (bool trstc : {false, true}) {
    for (auto s : {SystemKind::kQamZf, SystemKind::kOqamMf, SystemKind::kCroqamMf}) {
      out.push_back({s, trstc});
    }
  }
  return out;
}

GfdmConfig system_config(SystemKind system, const SystemSetup& setup) {
  const int k = setup.subcarriers;
  const int m = setup.subsymbols;
  switch (system) {
    case SystemKind::kQamZf:
      return make_gfdm_config(k, m, FilterFamily::kRC, 0.5, Detector::kZF, ModulationMode::kQAM,
                              setup.cp_length);
    case SystemKind::kOqamMf:
      return make_gfdm_config(k, m, FilterFamily::kRRC, 1.0, Detector::kMF, ModulationMode::kOQAM,
                              setup.cp_length);
    case SystemKind::kCroqamMf:
      return make_gfdm_config(k, m, FilterFamily::kCRRC, 1.0, Detector::kMF,
                              ModulationMode::kCROQAM, setup.cp_length);
  }
  throw Error("unknown system");
}

double qam16_ser(double gamma) {
  if (gamma <= 0.0) return 15.0 / 16.0;
  const double q = 0.5 * std::erfc(std::sqrt(gamma / 5.0) / std::sqrt(2.0));
  const double per_axis = 1.5 * q;
  return 1.0 - (1.0 - per_axis) * (1.0 - per_axis);
}

namespace {

// Nodes for the bivariate normal integral over theta in [0, asin(rho)];
// fewer nodes suffice for weak correlation.
template <int N>
void add_nodes(double asr, std::vector<double>& w, std::vector<double>& same, std::vector<double>& other) {
  using rule = boost::math::quadrature::gauss<double, N>;
  for (std::size_t i = 0; i < rule::abscissa().size(); ++i) {
    const double x = rule::abscissa()[i];
    for (double sign : {-1.0, 1.0}) {
      if (x == 0.0 && sign > 0.0) break;
      const double sn = std::sin(asr * (1.0 + sign * x) / 2.0);
      w.push_back(rule::weights()[i]);
      same.push_back(1.0 / (1.0 + sn));
      other.push_back(1.0 / (1.0 - sn));
    }
  }
}

constexpr double kQuadratureLimit = 0.925;

}  // namespace

CorrelatedQam16::CorrelatedQam16(double rho) : rho_(rho) {
  require(std::abs(rho) < 1.0, "I/Q noise correlation must lie in (-1, 1)");
  if (rho == 0.0 || std::abs(rho) >= kQuadratureLimit) return;
  const double asr = std::asin(rho);
  scale_ = asr / (4.0 * kPi);
  if (std::abs(rho) < 0.3) {
    add_nodes<6>(asr, weight_, same_side_, other_side_);
  } else if (std::abs(rho) < 0.75) {
    add_nodes<12>(asr, weight_, same_side_, other_side_);
  } else {
    add_nodes<20>(asr, weight_, same_side_, other_side_);
  }
}

double CorrelatedQam16::ser(double gamma) const {
  if (gamma <= 0.0) return 15.0 / 16.0;
  const double t = std::sqrt(gamma / 5.0);
  const double tail = 0.5 * std::erfc(t / std::sqrt(2.0));  // per-axis Phi(-t)
  // Averaged over the constellation, SER = 3 tail - 9/8 (J+ + J-), with J+
  // and J- the probabilities that both noise components exceed t with equal
  // or opposite signs.
  double joint = 2.0 * tail * tail;
  if (!weight_.empty()) {
    const double t2 = t * t;
    double sum = 0.0;
    for (std::size_t i = 0; i < weight_.size(); ++i) {
      sum += weight_[i] * (std::exp(-t2 * same_side_[i]) - std::exp(-t2 * other_side_[i]));
    }
    joint += scale_ * sum;
  } else if (rho_ != 0.0) {
    joint = 2.0 * tail - 2.0 * boost::math::owens_t(t, std::sqrt((1.0 - rho_) / (1.0 + rho_))) -
            2.0 * boost::math::owens_t(t, std::sqrt((1.0 + rho_) / (1.0 - rho_)));
  }
  return 3.0 * tail - 1.125 * joint;
}

double qam16_ser(double gamma, double rho) { return CorrelatedQam16(rho).ser(gamma); }

namespace {

void validate(const SerOptions& opts) {
  require(opts.trials > 0, "SER run needs at least one trial");
  require(!opts.snr_db.empty(), "SER run needs at least one SNR point");
  require(opts.workers >= 1, "worker count must be positive");
  require(opts.setup.cp_length >= opts.setup.pdp_length - 1,
          "cyclic prefix shorter than the channel memory");
}

double noise_var(double snr_db) { return std::pow(10.0, -snr_db / 10.0); }

// Everything a trial needs; immutable and shared between workers.
class Simulator {
 public:
  Simulator(const SerConfigId& id, const SerOptions& opts)
      : id_(id),
        opts_(opts),
        modem_(build_modem(system_config(id.system, opts.setup))),
        pdp_(make_pdp(opts.setup.pdp_length, opts.setup.pdp_span_db)) {}

  int n() const { return modem_.n(); }
  int blocks() const { return id_.trstc ? 2 : 1; }
  std::int64_t decisions_per_trial() const { return static_cast<std::int64_t>(blocks()) * n(); }

  ChannelRealization channel(int trial, Stream stream) const {
    return draw_channel(pdp_, derive_seed(opts_.base_seed, static_cast<std::uint64_t>(trial), stream), n());
  }

  // Error counts per SNR point for one trial.
  std::vector<double> simulate(int trial) const {
    const int n_samples = n();
    const int cp = opts_.setup.cp_length;
    const QamMapper& mapper = qam16();
    const auto seed = [&](Stream s) {
      return derive_seed(opts_.base_seed, static_cast<std::uint64_t>(trial), s);
    };

    std::vector<std::vector<int>> sent;
    std::vector<CVector> signal_part;
    std::vector<CVector> noise_part;
    Rng noise_rng(seed(Stream::kNoise));
    bool saturated = false;

    if (!id_.trstc) {
      Rng payload_rng(seed(Stream::kPayload));
      sent.push_back(mapper.random_indices(payload_rng, n_samples));
      const CVector x = add_cp(modulate_samples(mapper.map(sent[0]), modem_), cp);
      const ChannelRealization ch = channel(trial, Stream::kChannel1);
      const CVector y = remove_cp(convolve_block(x, ch.taps), cp);
      const CVector w = remove_cp(complex_gaussian(noise_rng, n_samples + cp, 1.0), cp);
      if (has_null(ch.freq)) {
        saturated = true;
      } else {
        signal_part.push_back(detect(fde_equalize(y, ch.freq), modem_));
        noise_part.push_back(detect(fde_equalize(w, ch.freq), modem_));
      }
    } else {
      Rng payload_rng1(seed(Stream::kPayload));
      Rng payload_rng2(seed(Stream::kPayload2));
      sent.push_back(mapper.random_indices(payload_rng1, n_samples));
      sent.push_back(mapper.random_indices(payload_rng2, n_samples));
      const StcBlockPair pair = trstc_encode(modulate_samples(mapper.map(sent[0]), modem_),
                                             modulate_samples(mapper.map(sent[1]), modem_));
      const ChannelRealization h1 = channel(trial, Stream::kChannel1);
      const ChannelRealization h2 = channel(trial, Stream::kChannel2);
      const auto receive = [&](const CVector& a1, const CVector& a2) {
        return remove_cp(convolve_block(add_cp(a1, cp), h1.taps) + convolve_block(add_cp(a2, cp), h2.taps),
                         cp);
      };
      const CVector y1 = receive(pair.a1_t1, pair.a2_t1);
      const CVector y2 = receive(pair.a1_t2, pair.a2_t2);
      const CVector w1 = remove_cp(complex_gaussian(noise_rng, n_samples + cp, 1.0), cp);
      const CVector w2 = remove_cp(complex_gaussian(noise_rng, n_samples + cp, 1.0), cp);
      const CVector gain = h1.freq.cwiseAbs2() + h2.freq.cwiseAbs2();
      if (gain.real().minCoeff() < kNullThreshold * kNullThreshold) {
        saturated = true;
      } else {
        const DecodedPair sig = trstc_decode(y1, y2, h1.freq, h2.freq);
        const DecodedPair noise = trstc_decode(w1, w2, h1.freq, h2.freq);
        signal_part.push_back(detect(sig.x1, modem_));
        signal_part.push_back(detect(sig.x2, modem_));
        noise_part.push_back(detect(noise.x1, modem_));
        noise_part.push_back(detect(noise.x2, modem_));
      }
    }

    std::vector<double> errors(opts_.snr_db.size(), 0.0);
    if (saturated) {
      std::fill(errors.begin(), errors.end(), static_cast<double>(decisions_per_trial()));
      return errors;
    }
    for (std::size_t p = 0; p < opts_.snr_db.size(); ++p) {
      const double sigma = std::sqrt(noise_var(opts_.snr_db[p]));
      long long count = 0;
      for (std::size_t b = 0; b < sent.size(); ++b) {
        const CVector& s = signal_part[b];
        const CVector& z = noise_part[b];
        for (int j = 0; j < n_samples; ++j) {
          if (mapper.demap(s[j] + sigma * z[j]) != sent[b][static_cast<std::size_t>(j)]) ++count;
        }
      }
      errors[p] = static_cast<double>(count);
    }
    return errors;
  }

  // Per-bin noise weights after equalization/combining: 1/|H|^2 or
  // 2/(|H1|^2 + |H2|^2). Empty when the trial is saturated.
  std::optional<RVector> noise_weights(int trial) const {
    const ChannelRealization h1 = channel(trial, Stream::kChannel1);
    if (!id_.trstc) {
      if (has_null(h1.freq)) return std::nullopt;
      return RVector(h1.freq.cwiseAbs2().cwiseInverse());
    }
    const ChannelRealization h2 = channel(trial, Stream::kChannel2);
    const RVector gain = h1.freq.cwiseAbs2() + h2.freq.cwiseAbs2();
    if (gain.minCoeff() < kNullThreshold * kNullThreshold) return std::nullopt;
    return RVector(2.0 * gain.cwiseInverse());
  }

  // V[j, l]: contribution of a unit-weight bin l to the noise variance of
  // detected symbol j (identical for both branches of offset modulation,
  // because the equalized noise is circularly stationary).
  RMatrix noise_projection() const {
    const int n_samples = n();
    const CMatrix& det = modem_.detector_matrix();
    RMatrix v(n_samples, n_samples);
    for (int j = 0; j < n_samples; ++j) {
      const CVector row = det.row(j).transpose();
      v.row(j) = (static_cast<double>(n_samples) * ifft(row).cwiseAbs2()).transpose();
    }
    return v;
  }

  // Cross term between the real branch and the half-period advanced
  // imaginary branch of offset detection: V[j, l] sin(pi l / M). Zero
  // matrix for complex QAM.
  RMatrix cross_projection(const RMatrix& v) const {
    const int n_samples = n();
    if (!is_offset(modem_.config.mode)) return RMatrix::Zero(n_samples, n_samples);
    RVector phase(n_samples);
    for (int l = 0; l < n_samples; ++l) {
      phase[l] = std::sin(kPi * l / modem_.config.subsymbols);
    }
    return v * phase.asDiagonal();
  }

  const SerOptions& opts() const { return opts_; }

 private:
  SerConfigId id_;
  SerOptions opts_;
  GfdmModem modem_;
  PowerDelayProfile pdp_;
};

SerCurve finish_curve(const SerConfigId& id, const SerOptions& opts, const Simulator& sim,
                      std::vector<double> per_trial, bool theory) {
  const std::size_t points = opts.snr_db.size();
  SerCurve curve;
  curve.config_id = theory ? to_string(id) + "-theory" : to_string(id);
  curve.snr_db = opts.snr_db;
  curve.trials = opts.trials;
  curve.theory = theory;
  curve.decisions = sim.decisions_per_trial() * opts.trials;
  curve.errors.assign(points, 0.0);
  // Trial-ordered summation keeps the result independent of the worker count.
  for (int t = 0; t < opts.trials; ++t) {
    for (std::size_t p = 0; p < points; ++p) curve.errors[p] += per_trial[static_cast<std::size_t>(t) * points + p];
  }
  for (std::size_t p = 0; p < points; ++p) {
    curve.ser.push_back(curve.errors[p] / static_cast<double>(curve.decisions));
    if (theory) {
      curve.flags.emplace_back("theory");
    } else {
      curve.flags.emplace_back(curve.errors[p] < kMinErrorsPerPoint ? "low_conf" : "ok");
    }
  }
  if (opts.keep_per_trial) curve.per_trial = std::move(per_trial);
  return curve;
}

}  // namespace

SerCurve run_ser(const SerConfigId& id, const SerOptions& opts) {
  validate(opts);
  const Simulator sim(id, opts);
  const std::size_t points = opts.snr_db.size();
  std::vector<double> per_trial(static_cast<std::size_t>(opts.trials) * points);
  parallel_for(opts.trials, opts.workers, [&](int t) {
    const std::vector<double> e = sim.simulate(t);
    std::copy(e.begin(), e.end(), per_trial.begin() + static_cast<std::ptrdiff_t>(t * points));
  });
  return finish_curve(id, opts, sim, std::move(per_trial), false);
}

SerCurve semi_analytic_ser(const SerConfigId& id, const SerOptions& opts) {
  validate(opts);
  const Simulator sim(id, opts);
  const RMatrix projection = sim.noise_projection();
  const RMatrix cross = sim.cross_projection(projection);
  const std::size_t points = opts.snr_db.size();
  const int n = sim.n();
  const double blocks = sim.blocks();
  std::vector<double> per_trial(static_cast<std::size_t>(opts.trials) * points);
  parallel_for(opts.trials, opts.workers, [&](int t) {
    double* out = per_trial.data() + static_cast<std::ptrdiff_t>(t * points);
    const auto weights = sim.noise_weights(t);
    if (!weights) {
      for (std::size_t p = 0; p < points; ++p) out[p] = blocks * n;
      return;
    }
    const RVector variance = projection * *weights;  // per unit N0
    const RVector covariance = cross * *weights;
    std::fill(out, out + points, 0.0);
    for (int j = 0; j < n; ++j) {
      const CorrelatedQam16 symbol(covariance[j] / variance[j]);
      for (std::size_t p = 0; p < points; ++p) {
        out[p] += blocks * symbol.ser(1.0 / (noise_var(opts.snr_db[p]) * variance[j]));
      }
    }
  });
  return finish_curve(id, opts, sim, std::move(per_trial), true);
}

OracleComparison compare_to_oracle(const SerCurve& mc, const SerCurve& theory) {
  require(mc.points() == theory.points() && mc.trials == theory.trials &&
              mc.decisions == theory.decisions,
          "oracle comparison needs curves over the same SNR grid and trials");
  require(!mc.per_trial.empty() && !theory.per_trial.empty(),
          "oracle comparison needs per-trial data (keep_per_trial)");
  const std::size_t points = mc.points();
  OracleComparison out;
  for (std::size_t p = 0; p < points; ++p) {
    double sum_sq = 0.0;
    for (int t = 0; t < mc.trials; ++t) {
      const std::size_t i = static_cast<std::size_t>(t) * points + p;
      const double r = mc.per_trial[i] - theory.per_trial[i];
      sum_sq += r * r;
    }
    const double sigma = std::sqrt(sum_sq) / static_cast<double>(mc.decisions);
    const double diff = mc.ser[p] - theory.ser[p];
    double z = 0.0;
    if (sigma > 0.0) {
      z = diff / sigma;
    } else if (diff != 0.0) {
      z = std::numeric_limits<double>::infinity();
    }
    out.sigma.push_back(sigma);
    out.z_score.push_back(z);
    out.max_abs_z = std::max(out.max_abs_z, std::abs(z));
  }
  return out;
}

std::optional<double> snr_at_ser(const SerCurve& curve, double target) {
  require(target > 0.0, "target SER must be positive");
  const double lt = std::log10(target);
  for (std::size_t p = 1; p < curve.points(); ++p) {
    const double a = curve.ser[p - 1];
    const double b = curve.ser[p];
    if (a >= target && b < target) {
      if (b <= 0.0) return curve.snr_db[p];
      const double la = std::log10(a);
      const double lb = std::log10(b);
      return curve.snr_db[p - 1] + (lt - la) / (lb - la) * (curve.snr_db[p] - curve.snr_db[p - 1]);
    }
  }
  return std::nullopt;
}

double max_ser_increase(const SerCurve& curve) {
  double worst = 0.0;
  for (std::size_t p = 1; p < curve.points(); ++p) worst = std::max(worst, curve.ser[p] - curve.ser[p - 1]);
  return worst;
}

}  // namespace croqam
