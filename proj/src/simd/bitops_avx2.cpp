// Copyright 2026 The lfgraph Authors
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

#include "lfg/simd/bitops.hpp"

#if defined(LFG_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace lfg::simd {
namespace {

constexpr std::size_t kLanes = 4;  // 64-bit words per 256-bit register

inline __m256i load(const Word* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Word* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

// Nibble-table popcount, accumulated per 64-bit lane with SAD.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i table =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                         _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) Word lanes[kLanes];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount_avx2(const Word* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::popcount(a[i]);
  return total;
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    acc = _mm256_add_epi64(
        acc, popcount_lanes(_mm256_and_si256(load(a + i), load(b + i))));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

bool equal_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

bool is_subset_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    // testc(b, a) is set when (~b & a) == 0.
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < n; ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

bool intersects_avx2(const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < n; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

void and_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(dst + i, _mm256_and_si256(load(a + i), load(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & b[i];
}

void or_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    store(dst + i, _mm256_or_si256(load(a + i), load(b + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

void andnot_into_avx2(Word* dst, const Word* a, const Word* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    // andnot(x, y) computes ~x & y.
    store(dst + i, _mm256_andnot_si256(load(b + i), load(a + i)));
  }
  for (; i < n; ++i) dst[i] = a[i] & ~b[i];
}

}  // namespace

const BitKernels* avx2_kernels() {
  static const BitKernels kernels{
      Isa::kAvx2,       popcount_avx2,  and_popcount_avx2,
      equal_avx2,       is_subset_avx2, intersects_avx2,
      and_into_avx2,    or_into_avx2,   andnot_into_avx2,
  };
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &kernels : nullptr;
}

}  // namespace lfg::simd

#else

namespace lfg::simd {
const BitKernels* avx2_kernels() { return nullptr; }
}  // namespace lfg::simd

#endif
