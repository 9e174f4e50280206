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

#pragma once

// Data-parallel complex kernels behind the matrix type. Each kernel has a
// scalar reference implementation and, on x86-64, an AVX2+FMA variant picked
// at runtime. The two must agree up to rounding; tests/test_kernels.cpp holds
// them to that.

#include <complex>
#include <cstddef>
#include <string_view>

namespace nk::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b) noexcept;

/// True when the CPU supports AVX2 and FMA and the variant was compiled in.
bool avx2_available() noexcept;

/// Backend used by the dispatching entry points below. Defaults to AVX2 when
/// available unless NOMURA_KIT_SIMD=scalar is set in the environment.
Backend active_backend() noexcept;

/// Throws InvalidInput when asking for AVX2 on a machine without it.
void set_backend(Backend b);

// out[i] = a[i] * b[i]
void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len);
// y[i] += alpha * x[i]
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len);
// sum a[i] * b[i] (no conjugation)
Complex dotu(const Complex* a, const Complex* b, std::size_t len);
// max |a[i] - b[i]|
double max_abs_diff(const Complex* a, const Complex* b, std::size_t len);

namespace scalar {
void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len);
Complex dotu(const Complex* a, const Complex* b, std::size_t len);
double max_abs_diff(const Complex* a, const Complex* b, std::size_t len);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NOMURA_KIT_HAVE_AVX2_KERNELS 1
namespace avx2 {
void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len);
void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len);
Complex dotu(const Complex* a, const Complex* b, std::size_t len);
double max_abs_diff(const Complex* a, const Complex* b, std::size_t len);
}  // namespace avx2
#endif

}  // namespace nk::kernels
