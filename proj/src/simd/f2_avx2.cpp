#include "f2_kernels_impl.hpp"

#if defined(KFLOER_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

#define KFLOER_AVX2 __attribute__((target("avx2,popcnt")))

namespace kfloer::simd::avx2 {

// Four words per 256-bit lane group; the tail falls back to word loops.

KFLOER_AVX2 void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(d, s));
  }
  for (; k < words; ++k) dst[k] ^= src[k];
}

KFLOER_AVX2 bool is_zero(const std::uint64_t* a, std::size_t words) {
  std::size_t k = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; k + 4 <= words; k += 4)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  for (; k < words; ++k) {
    if (a[k]) return false;
  }
  return true;
}

KFLOER_AVX2 bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t k = 0;
  for (; k + 4 <= words; k += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; k < words; ++k) {
    if (a[k] & b[k]) return true;
  }
  return false;
}

KFLOER_AVX2 std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  // No AVX2 byte-popcount win at these sizes; hardware popcnt per word.
  std::size_t n = 0;
  for (std::size_t k = 0; k < words; ++k)
    n += static_cast<std::size_t>(_mm_popcnt_u64(a[k]));
  return n;
}

}  // namespace kfloer::simd::avx2

#endif
