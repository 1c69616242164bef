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

#include <bitset>
#include <map>
#include <random>

#include "croqam/qam.hpp"
#include "doctest.h"

using namespace croqam;

TEST_SUITE("qam") {

TEST_CASE("constellation has unit energy and square layout") {
  const auto& q = qam16();
  double energy = 0.0;
  std::map<std::pair<int, int>, int> seen;
  for (int i = 0; i < 16; ++i) {
    const cdouble p = q.point(i);
    energy += std::norm(p);
    const double re = p.real() * std::sqrt(10.0);
    const double im = p.imag() * std::sqrt(10.0);
    CHECK(std::abs(re - std::round(re)) < 1e-12);
    CHECK(std::abs(im - std::round(im)) < 1e-12);
    ++seen[{static_cast<int>(std::lround(re)), static_cast<int>(std::lround(im))}];
  }
  CHECK(energy / 16.0 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(seen.size() == 16);
  for (const auto& [xy, count] : seen) {
    CHECK(count == 1);
    CHECK(std::abs(xy.first) % 2 == 1);
    CHECK(std::abs(xy.first) <= 3);
    CHECK(std::abs(xy.second) % 2 == 1);
  }
  CHECK(q.min_distance() == doctest::Approx(2.0 / std::sqrt(10.0)));
}

TEST_CASE("Gray labeling: nearest neighbours differ in one bit") {
  const auto& q = qam16();
  for (int a = 0; a < 16; ++a) {
    for (int b = 0; b < 16; ++b) {
      if (std::abs(std::abs(q.point(a) - q.point(b)) - q.min_distance()) < 1e-12) {
        CHECK(std::bitset<4>(static_cast<unsigned>(a ^ b)).count() == 1);
      }
    }
  }
  const double s = 1.0 / std::sqrt(10.0);
  CHECK(std::abs(q.point(0b0000) - cdouble(-3 * s, -3 * s)) < 1e-15);
  CHECK(std::abs(q.point(0b1011) - cdouble(3 * s, 1 * s)) < 1e-15);
  CHECK(std::abs(q.point(0b0110) - cdouble(-1 * s, 3 * s)) < 1e-15);
}

TEST_CASE("demap inverts map and slices to the nearest point") {
  const auto& q = qam16();
  std::vector<int> all(16);
  for (int i = 0; i < 16; ++i) all[i] = i;
  CHECK(q.demap(q.map(all)) == all);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int t = 0; t < 2000; ++t) {
    const cdouble y(u(rng), u(rng));
    int best = 0;
    for (int i = 1; i < 16; ++i) {
      if (std::abs(y - q.point(i)) < std::abs(y - q.point(best))) best = i;
    }
    CHECK(q.demap(y) == best);
  }
}

TEST_CASE("random indices are uniform and reproducible") {
  const auto& q = qam16();
  Rng a(3);
  Rng b(3);
  const auto x = q.random_indices(a, 64000);
  CHECK(x == q.random_indices(b, 64000));
  std::array<int, 16> hist{};
  for (int v : x) {
    REQUIRE(v >= 0);
    REQUIRE(v < 16);
    ++hist[static_cast<std::size_t>(v)];
  }
  for (int h : hist) CHECK(std::abs(h - 4000) < 300);
}

}  // TEST_SUITE
