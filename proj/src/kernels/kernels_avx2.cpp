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

// Compiled with -mavx2 -mfma. Nothing here may run before the dispatcher has
// checked the CPU.

#include "nomura_kit/kernels.hpp"

#if defined(NOMURA_KIT_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <algorithm>
#include <cmath>

namespace nk::kernels::avx2 {
namespace {

// std::complex<double> is layout-compatible with double[2].
inline const double* raw(const Complex* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(Complex* p) { return reinterpret_cast<double*>(p); }

// Two complex products at once: lanes hold [re0, im0, re1, im1].
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);           // br0 br0 br1 br1
  const __m256d b_im = _mm256_permute_pd(b, 0xF);      // bi0 bi0 bi1 bi1
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);    // ai0 ar0 ai1 ar1
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_swap, b_im));
}

}  // namespace

void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  double* po = raw(out);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(po + 2 * i, cmul(va, vb));
  }
  if (i < len) scalar::mul(a + i, b + i, out + i, len - i);
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  const __m256d a_re = _mm256_set1_pd(alpha.real());
  const __m256d a_im = _mm256_set1_pd(alpha.imag());
  const double* px = raw(x);
  double* py = raw(y);
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d vx = _mm256_loadu_pd(px + 2 * i);
    const __m256d vx_swap = _mm256_permute_pd(vx, 0x5);
    // even lanes: ar*xr - ai*xi, odd lanes: ar*xi + ai*xr
    const __m256d prod = _mm256_fmaddsub_pd(a_re, vx, _mm256_mul_pd(a_im, vx_swap));
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(_mm256_loadu_pd(py + 2 * i), prod));
  }
  if (i < len) scalar::axpy(alpha, x + i, y + i, len - i);
}

Complex dotu(const Complex* a, const Complex* b, std::size_t len) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
    acc1 = _mm256_add_pd(acc1, cmul(_mm256_loadu_pd(pa + 2 * i + 4), _mm256_loadu_pd(pb + 2 * i + 4)));
  }
  for (; i + 2 <= len; i += 2) {
    acc0 = _mm256_add_pd(acc0, cmul(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  Complex sum(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  if (i < len) sum += scalar::dotu(a + i, b + i, len - i);
  return sum;
}

double max_abs_diff(const Complex* a, const Complex* b, std::size_t len) {
  const double* pa = raw(a);
  const double* pb = raw(b);
  __m256d best = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= len; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
    const __m256d sq = _mm256_mul_pd(d, d);
    best = _mm256_max_pd(best, _mm256_hadd_pd(sq, sq));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double m = std::sqrt(std::max({lanes[0], lanes[1], lanes[2], lanes[3]}));
  if (i < len) m = std::max(m, scalar::max_abs_diff(a + i, b + i, len - i));
  return m;
}

}  // namespace nk::kernels::avx2

#endif
