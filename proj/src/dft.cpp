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

#include "croqam/dft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace croqam {
namespace {

// Namespace-scope so the mutex outlives the plan cache during shutdown.
std::mutex g_planner_mutex;

}  // namespace

Dft::Dft(int n) : n_(n), forward_plan_(nullptr), inverse_plan_(nullptr) {
  require(n > 0, "DFT length must be positive");
  std::lock_guard lock(g_planner_mutex);
  auto* in = fftw_alloc_complex(n);
  auto* out = fftw_alloc_complex(n);
  const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
  forward_plan_ = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, flags);
  inverse_plan_ = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, flags);
  fftw_free(in);
  fftw_free(out);
  if (!forward_plan_ || !inverse_plan_) throw Error("FFTW planning failed");
}

Dft::~Dft() {
  std::lock_guard lock(g_planner_mutex);
  if (forward_plan_) fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  if (inverse_plan_) fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

CVector Dft::forward(const CVector& x) const {
  require(x.size() == n_, "DFT input length mismatch");
  CVector in = x;
  CVector out(n_);
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

CVector Dft::inverse(const CVector& X) const {
  require(X.size() == n_, "DFT input length mismatch");
  CVector in = X;
  CVector out(n_);
  fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_),
                   reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  out /= static_cast<double>(n_);
  return out;
}

const Dft& dft(int n) {
  static std::mutex cache_mutex;
  static std::map<int, std::unique_ptr<Dft>> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<Dft>(n);
  return *slot;
}

}  // namespace croqam
