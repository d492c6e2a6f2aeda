// Copyright 2026 The syzcert Authors
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

// Compiled with -mavx2. Only entered after a runtime CPU check.

#include <immintrin.h>

#include "syzcert/simd/kernels.hpp"

namespace syzcert::simd {
namespace {

// Reduction of 0 <= s < p^2 <= 2^24 by a float reciprocal. The quotient
// estimate is off by at most one in either direction.
constexpr std::uint32_t kMaxVectorPrime = 4096;

inline __m256i reduce_small(__m256i s, __m256 inv_p, __m256i vp, __m256i vp_minus_1) {
  const __m256 sf = _mm256_cvtepi32_ps(s);
  const __m256i q = _mm256_cvttps_epi32(_mm256_mul_ps(sf, inv_p));
  __m256i r = _mm256_sub_epi32(s, _mm256_mullo_epi32(q, vp));
  const __m256i neg = _mm256_cmpgt_epi32(_mm256_setzero_si256(), r);
  r = _mm256_add_epi32(r, _mm256_and_si256(neg, vp));
  const __m256i big = _mm256_cmpgt_epi32(r, vp_minus_1);
  return _mm256_sub_epi32(r, _mm256_and_si256(big, vp));
}

void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t c, std::size_t n,
               std::uint32_t p) {
  std::size_t i = 0;
  if (p <= kMaxVectorPrime) {
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vp1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    for (; i + 8 <= n; i += 8) {
      const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
      const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
      const __m256i s = _mm256_add_epi32(vy, _mm256_mullo_epi32(vx, vc));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), reduce_small(s, inv_p, vp, vp1));
    }
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + cc * x[i]) % p);
}

void scale_avx2(std::uint32_t* x, std::uint32_t c, std::size_t n, std::uint32_t p) {
  std::size_t i = 0;
  if (p <= kMaxVectorPrime) {
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vp1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    const __m256i vc = _mm256_set1_epi32(static_cast<int>(c));
    for (; i + 8 <= n; i += 8) {
      const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
      const __m256i s = _mm256_mullo_epi32(vx, vc);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), reduce_small(s, inv_p, vp, vp1));
    }
  }
  const std::uint64_t cc = c;
  for (; i < n; ++i) x[i] = static_cast<std::uint32_t>((cc * x[i]) % p);
}

std::uint32_t dot_avx2(const std::uint32_t* x, const std::uint32_t* y, std::size_t n,
                       std::uint32_t p) {
  std::size_t i = 0;
  std::uint64_t acc = 0;
  if (p <= kMaxVectorPrime) {
    const __m256 inv_p = _mm256_set1_ps(1.0f / static_cast<float>(p));
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i vp1 = _mm256_set1_epi32(static_cast<int>(p - 1));
    __m256i vacc = _mm256_setzero_si256();
    for (; i + 8 <= n; i += 8) {
      const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
      const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
      // acc < p and product <= (p-1)^2, so the sum stays below p^2.
      const __m256i s = _mm256_add_epi32(vacc, _mm256_mullo_epi32(vx, vy));
      vacc = reduce_small(s, inv_p, vp, vp1);
    }
    alignas(32) std::uint32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), vacc);
    for (std::uint32_t v : lanes) acc += v;
    acc %= p;
  }
  for (; i < n; ++i) acc = (acc + static_cast<std::uint64_t>(x[i]) * y[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &axpy_avx2, &scale_avx2, &dot_avx2};
  return table;
}
}  // namespace detail

}  // namespace syzcert::simd
