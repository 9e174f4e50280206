// Copyright 2026 The nomura-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "nomura_kit/kernels.hpp"

namespace nk::kernels::scalar {

void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    // Written out so the rounding matches the FMA-free textbook product and
    // not libstdc++'s NaN-recovering operator*.
    const double re = a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    const double im = a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
    out[i] = Complex(re, im);
  }
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < len; ++i) {
    const double re = ar * x[i].real() - ai * x[i].imag();
    const double im = ar * x[i].imag() + ai * x[i].real();
    y[i] = Complex(y[i].real() + re, y[i].imag() + im);
  }
}

Complex dotu(const Complex* a, const Complex* b, std::size_t len) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    re += a[i].real() * b[i].real() - a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() + a[i].imag() * b[i].real();
  }
  return {re, im};
}

double max_abs_diff(const Complex* a, const Complex* b, std::size_t len) {
  double best = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double dr = a[i].real() - b[i].real();
    const double di = a[i].imag() - b[i].imag();
    best = std::max(best, dr * dr + di * di);
  }
  return std::sqrt(best);
}

}  // namespace nk::kernels::scalar
