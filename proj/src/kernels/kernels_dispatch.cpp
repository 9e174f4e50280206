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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "nomura_kit/errors.hpp"
#include "nomura_kit/kernels.hpp"

namespace nk::kernels {
namespace {

bool detect_avx2() noexcept {
#if defined(NOMURA_KIT_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend initial_backend() noexcept {
  const char* env = std::getenv("NOMURA_KIT_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
  return detect_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{initial_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool avx2_available() noexcept {
  static const bool available = detect_avx2();
  return available;
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) throw InvalidInput("AVX2 kernels are not available on this CPU");
  current().store(b, std::memory_order_relaxed);
}

#if defined(NOMURA_KIT_HAVE_AVX2_KERNELS)
#define NK_DISPATCH(fn, ...) \
  (active_backend() == Backend::Avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define NK_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

void mul(const Complex* a, const Complex* b, Complex* out, std::size_t len) { NK_DISPATCH(mul, a, b, out, len); }

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) { NK_DISPATCH(axpy, alpha, x, y, len); }

Complex dotu(const Complex* a, const Complex* b, std::size_t len) { return NK_DISPATCH(dotu, a, b, len); }

double max_abs_diff(const Complex* a, const Complex* b, std::size_t len) {
  return NK_DISPATCH(max_abs_diff, a, b, len);
}

#undef NK_DISPATCH

}  // namespace nk::kernels
