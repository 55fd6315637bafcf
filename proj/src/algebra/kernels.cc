// Copyright 2026 The Authors.
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

#include "milnor/algebra/kernels.h"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MILNOR_X86 1
#endif

namespace milnor::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src,
                     std::uint32_t c, std::uint32_t m, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t v = dst[i] + static_cast<std::uint64_t>(c) * src[i];
    dst[i] = static_cast<std::uint32_t>(v % m);
  }
}

#ifdef MILNOR_X86

// Shoup multiplication: with cp = floor(c * 2^32 / m), the quotient estimate
// (cp * s) >> 32 is off by at most one, so one conditional subtraction
// finishes the reduction.
__attribute__((target("avx2"))) void axpy_mod_avx2(
    std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c,
    std::uint32_t m, std::size_t n) {
  const std::uint32_t cp = static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(c) << 32) / m);
  const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i vcp = _mm256_set1_epi32(static_cast<int>(cp));
  const __m256i vm = _mm256_set1_epi32(static_cast<int>(m));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i even = _mm256_mul_epu32(s, vcp);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), vcp);
    __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
    __m256i r = _mm256_sub_epi32(_mm256_mullo_epi32(s, vc),
                                 _mm256_mullo_epi32(q, vm));
    r = _mm256_min_epu32(r, _mm256_sub_epi32(r, vm));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    d = _mm256_add_epi32(d, r);
    d = _mm256_min_epu32(d, _mm256_sub_epi32(d, vm));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
  }
  axpy_mod_scalar(dst + i, src + i, c, m, n - i);
}

bool avx2_supported() { return __builtin_cpu_supports("avx2"); }

#else

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                   std::uint32_t c, std::uint32_t m, std::size_t n) {
  axpy_mod_scalar(dst, src, c, m, n);
}

bool avx2_supported() { return false; }

#endif

namespace {

bool forced_scalar() {
  const char* env = std::getenv("MILNOR_KERNEL");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}

}  // namespace

AxpyModFn axpy_mod() {
  static const AxpyModFn fn =
      (!forced_scalar() && avx2_supported()) ? axpy_mod_avx2 : axpy_mod_scalar;
  return fn;
}

const char* axpy_mod_name() {
  return axpy_mod() == axpy_mod_avx2 ? "avx2" : "scalar";
}

}  // namespace milnor::kernels
