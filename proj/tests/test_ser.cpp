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

#include <random>

#include <boost/math/special_functions/owens_t.hpp>

#include "croqam/qam.hpp"
#include "croqam/ser.hpp"
#include "doctest.h"

using namespace croqam;

namespace {

SystemSetup small_setup() {
  SystemSetup s;
  s.subcarriers = 16;
  s.subsymbols = 5;
  s.cp_length = 8;
  s.pdp_length = 8;
  s.pdp_span_db = 16.0;
  return s;
}

SerOptions small_options(int trials, std::vector<double> snr) {
  SerOptions o;
  o.snr_db = std::move(snr);
  o.trials = trials;
  o.base_seed = 11;
  o.setup = small_setup();
  return o;
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

}  // namespace

TEST_SUITE("metrics_harness") {

TEST_CASE("16-QAM error probability formula") {
  for (double db : {0.0, 5.0, 10.0, 15.0, 20.0}) {
    const double g = std::pow(10.0, db / 10.0);
    const double p = 1.5 * q_function(std::sqrt(g / 5.0));
    CHECK(qam16_ser(g) == doctest::Approx(1.0 - (1.0 - p) * (1.0 - p)).epsilon(1e-12));
  }
  CHECK(qam16_ser(0.0) == doctest::Approx(0.9375));
}

TEST_CASE("16-QAM error probability matches an AWGN simulation") {
  const auto& q = qam16();
  Rng rng(42);
  for (double db : {8.0, 12.0, 15.0}) {
    const double n0 = std::pow(10.0, -db / 10.0);
    const int count = 200000;
    const auto idx = q.random_indices(rng, count);
    const CVector y = q.map(idx) + complex_gaussian(rng, count, n0);
    const auto dec = q.demap(y);
    int errors = 0;
    for (int i = 0; i < count; ++i) errors += dec[i] != idx[i];
    const double p = qam16_ser(1.0 / n0);
    const double sigma = std::sqrt(p * (1.0 - p) / count);
    CAPTURE(db);
    CHECK(std::abs(static_cast<double>(errors) / count - p) < 4.0 * sigma);
  }
}

TEST_CASE("correlated I/Q noise: exact error probability") {
  for (double db : {0.0, 6.0, 12.0, 18.0}) {
    const double g = std::pow(10.0, db / 10.0);
    CHECK(qam16_ser(g, 0.0) == doctest::Approx(qam16_ser(g)).epsilon(1e-14));
    CHECK(qam16_ser(g, 1e-9) == doctest::Approx(qam16_ser(g)).epsilon(1e-8));
    CHECK(qam16_ser(g, 0.4) == doctest::Approx(qam16_ser(g, -0.4)).epsilon(1e-12));
    CHECK(qam16_ser(g, 0.4) < qam16_ser(g));
  }
  CHECK(qam16_ser(0.0, 0.3) == doctest::Approx(15.0 / 16.0));
  CHECK_THROWS_AS(qam16_ser(10.0, 1.0), Error);

  // direct simulation with correlated in-phase and quadrature noise
  const auto& q = qam16();
  Rng rng(43);
  std::normal_distribution<double> normal;
  for (double rho : {0.35, -0.6}) {
    const double db = 10.0;
    const double sigma = std::sqrt(std::pow(10.0, -db / 10.0) / 2.0);
    const int count = 400000;
    const auto idx = q.random_indices(rng, count);
    int errors = 0;
    for (int i = 0; i < count; ++i) {
      const double a = normal(rng);
      const double b = rho * a + std::sqrt(1.0 - rho * rho) * normal(rng);
      errors += q.demap(q.point(idx[i]) + sigma * cdouble(a, b)) != idx[i];
    }
    const double p = qam16_ser(std::pow(10.0, db / 10.0), rho);
    CAPTURE(rho);
    CHECK(std::abs(static_cast<double>(errors) / count - p) < 4.0 * std::sqrt(p * (1.0 - p) / count));
  }
}

TEST_CASE("correlated-axes quadrature agrees with Owen's T") {
  const auto reference = [](double gamma, double rho) {
    // bivariate normal probabilities through Owen's T, then the constellation average
    const double t = std::sqrt(gamma / 5.0);
    const double up = 1.0 - q_function(t);
    const double lo = q_function(t);
    const double a = up - 2.0 * boost::math::owens_t(t, std::sqrt((1.0 - rho) / (1.0 + rho)));
    const double b = 2.0 * boost::math::owens_t(t, std::sqrt((1.0 + rho) / (1.0 - rho)));
    const double c = a - (up - lo);
    return 1.0 - (0.25 * (a - 2.0 * b + c) + 0.5 * (a - b) + 0.125 * (a + up - b));
  };
  for (double rho : {-0.95, -0.8, -0.5, -0.2, 0.05, 0.29, 0.31, 0.6, 0.74, 0.76, 0.9, 0.93}) {
    const CorrelatedQam16 eval(rho);
    for (double db = -5.0; db <= 28.0; db += 1.5) {
      const double g = std::pow(10.0, db / 10.0);
      const double ref = reference(g, rho);
      CAPTURE(rho);
      CAPTURE(db);
      CHECK(std::abs(eval.ser(g) - ref) <= 1e-13 + 1e-8 * ref);
    }
  }
}

TEST_CASE("configuration identifiers") {
  CHECK(all_ser_configs().size() == 6);
  for (const auto& id : all_ser_configs()) CHECK(parse_ser_config_id(to_string(id)) == id);
  CHECK(to_string(SerConfigId{SystemKind::kCroqamMf, true}) == "CROQAM-MF-TRSTC");
  CHECK(to_string(SerConfigId{SystemKind::kQamZf, false}) == "QAM-ZF");
  CHECK_THROWS_AS(parse_ser_config_id("QAM-MF"), Error);
  const auto cr = system_config(SystemKind::kCroqamMf);
  CHECK(cr.filter.family == FilterFamily::kCRRC);
  CHECK(cr.detector == Detector::kMF);
  const auto qam = system_config(SystemKind::kQamZf);
  CHECK(qam.filter.family == FilterFamily::kRC);
  CHECK(qam.filter.rolloff == 0.5);
  CHECK(qam.detector == Detector::kZF);
  CHECK(system_config(SystemKind::kOqamMf).mode == ModulationMode::kOQAM);
}

TEST_CASE("Monte Carlo curve bookkeeping") {
  const auto opts = small_options(40, {0.0, 10.0, 20.0, 30.0});
  const auto curve = run_ser({SystemKind::kCroqamMf, false}, opts);
  CHECK(curve.config_id == "CROQAM-MF");
  CHECK(curve.decisions == 40 * 80);
  CHECK(curve.trials == 40);
  REQUIRE(curve.points() == 4);
  for (std::size_t p = 0; p < 4; ++p) {
    CHECK(curve.ser[p] == doctest::Approx(curve.errors[p] / curve.decisions));
    CHECK(curve.flags[p] == (curve.errors[p] < kMinErrorsPerPoint ? "low_conf" : "ok"));
  }
  CHECK(curve.ser[0] > 0.3);
  CHECK(max_ser_increase(curve) == 0.0);
  const auto stc = run_ser({SystemKind::kCroqamMf, true}, opts);
  CHECK(stc.decisions == 2 * 40 * 80);
  CHECK(stc.config_id == "CROQAM-MF-TRSTC");
}

TEST_CASE("results are deterministic and independent of worker count") {
  auto opts = small_options(24, {5.0, 15.0, 25.0});
  opts.keep_per_trial = true;
  const auto a = run_ser({SystemKind::kQamZf, true}, opts);
  opts.workers = 3;
  const auto b = run_ser({SystemKind::kQamZf, true}, opts);
  CHECK(a.errors == b.errors);
  CHECK(a.per_trial == b.per_trial);
  opts.base_seed = 12;
  CHECK(run_ser({SystemKind::kQamZf, true}, opts).per_trial != a.per_trial);
}

TEST_CASE("per-trial counts add up") {
  auto opts = small_options(16, {10.0, 20.0});
  opts.keep_per_trial = true;
  const auto c = run_ser({SystemKind::kOqamMf, false}, opts);
  REQUIRE(c.per_trial.size() == 32);
  for (std::size_t p = 0; p < 2; ++p) {
    double sum = 0.0;
    for (int t = 0; t < 16; ++t) sum += c.per_trial[static_cast<std::size_t>(t) * 2 + p];
    CHECK(sum == c.errors[p]);
  }
}

TEST_CASE("Monte Carlo agrees with the semi-analytic reference") {
  auto opts = small_options(3000, {10.0, 16.0, 22.0, 28.0});
  opts.keep_per_trial = true;
  for (auto id : {SerConfigId{SystemKind::kCroqamMf, false}, SerConfigId{SystemKind::kQamZf, false},
                  SerConfigId{SystemKind::kOqamMf, true}}) {
    const auto mc = run_ser(id, opts);
    const auto th = semi_analytic_ser(id, opts);
    CHECK(th.config_id == to_string(id) + "-theory");
    CHECK(th.flags[0] == "theory");
    const auto cmp = compare_to_oracle(mc, th);
    CAPTURE(to_string(id));
    CAPTURE(cmp.max_abs_z);
    CHECK(cmp.within(4.0));
  }
}

TEST_CASE("transmit diversity lowers the error rate at high SNR") {
  const auto opts = small_options(200, {25.0});
  const auto single = semi_analytic_ser({SystemKind::kCroqamMf, false}, opts);
  const auto stc = semi_analytic_ser({SystemKind::kCroqamMf, true}, opts);
  CHECK(stc.ser[0] < 0.5 * single.ser[0]);
}

TEST_CASE("oracle comparison needs per-trial data") {
  const auto opts = small_options(4, {10.0});
  const auto mc = run_ser({SystemKind::kCroqamMf, false}, opts);
  const auto th = semi_analytic_ser({SystemKind::kCroqamMf, false}, opts);
  CHECK_THROWS_AS(compare_to_oracle(mc, th), Error);
}

TEST_CASE("SNR crossing interpolation") {
  SerCurve c;
  c.snr_db = {0.0, 10.0, 20.0};
  c.ser = {1e-1, 1e-2, 1e-4};
  CHECK(*snr_at_ser(c, 1e-2 + 0.0) == doctest::Approx(10.0));
  CHECK(*snr_at_ser(c, 1e-3) == doctest::Approx(15.0));
  CHECK(*snr_at_ser(c, std::sqrt(1e-1 * 1e-2)) == doctest::Approx(5.0));
  CHECK(!snr_at_ser(c, 1e-6).has_value());
  CHECK_THROWS_AS(snr_at_ser(c, 0.0), Error);
  c.ser = {1e-1, 2e-1, 1e-2};
  CHECK(max_ser_increase(c) == doctest::Approx(0.1));
}

TEST_CASE("option validation") {
  CHECK_THROWS_AS(run_ser({SystemKind::kCroqamMf, false}, small_options(0, {10.0})), Error);
  CHECK_THROWS_AS(run_ser({SystemKind::kCroqamMf, false}, small_options(2, {})), Error);
  auto bad = small_options(2, {10.0});
  bad.setup.pdp_length = 12;
  CHECK_THROWS_AS(run_ser({SystemKind::kCroqamMf, false}, bad), Error);
}

}  // TEST_SUITE
