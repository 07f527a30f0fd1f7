// Copyright 2026 The ellnb Authors.
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

#include <immintrin.h>

#include <cassert>

#include "ellnb/kernels.hpp"

namespace ellnb::kernels::avx2 {

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  __m128i lo = _mm256_castsi256_si128(v);
  __m128i hi = _mm256_extracti128_si256(v, 1);
  __m128i s = _mm_add_epi64(lo, hi);
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

}  // namespace

std::uint32_t dot_mod(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t p) {
  assert(a.size() == b.size());
  if (p >= (1u << 16)) return scalar::dot_mod(a, b, p);

  // Lane products are < 2^32 and are widened before accumulation, so the
  // 64-bit accumulators hold up to 2^32 terms without overflow.
  const std::size_t n = a.size();
  __m256i acc_lo = _mm256_setzero_si256();
  __m256i acc_hi = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    __m256i prod = _mm256_mullo_epi32(va, vb);
    acc_lo = _mm256_add_epi64(acc_lo, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(prod)));
    acc_hi = _mm256_add_epi64(acc_hi, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(prod, 1)));
  }
  std::uint64_t acc = hsum_epi64(acc_lo) + hsum_epi64(acc_hi);
  for (; i < n; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
  return static_cast<std::uint32_t>(acc % p);
}

std::size_t count_nonzero(std::span<const std::uint32_t> a) {
  const std::size_t n = a.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t zeros = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    auto mask = static_cast<unsigned>(
        _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(v, zero))));
    zeros += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  std::size_t count = i - zeros;
  for (; i < n; ++i) count += (a[i] != 0);
  return count;
}

}  // namespace ellnb::kernels::avx2
