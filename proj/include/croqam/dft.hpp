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

#include "croqam/types.hpp"

namespace croqam {

/// Complex DFT of a fixed length backed by FFTW.
///
/// forward:  X[l] = sum_n x[n] exp(-j 2 pi n l / N)
/// inverse:  x[n] = 1/N sum_l X[l] exp(+j 2 pi n l / N)
///
/// Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED so results do not
/// depend on buffer alignment; execution is thread-safe.
class Dft {
 public:
  explicit Dft(int n);
  ~Dft();
  Dft(const Dft&) = delete;
  Dft& operator=(const Dft&) = delete;

  int size() const { return n_; }

  CVector forward(const CVector& x) const;
  CVector inverse(const CVector& X) const;

 private:
  int n_;
  void* forward_plan_;
  void* inverse_plan_;
};

/// Shared, lazily planned transform for length n. Safe to call from
/// several threads.
const Dft& dft(int n);

inline CVector fft(const CVector& x) { return dft(static_cast<int>(x.size())).forward(x); }
inline CVector ifft(const CVector& X) { return dft(static_cast<int>(X.size())).inverse(X); }

}  // namespace croqam
