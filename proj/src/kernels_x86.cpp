#include "lce/kernels.hpp"

#ifdef LCE_KERNELS_X86

#include <immintrin.h>

#include <bit>

// Functions carry target attributes instead of a per-file -mavx2 so inline
// library code instantiated here never leaks AVX2 into scalar call sites.
#define LCE_AVX2 __attribute__((target("avx2")))

namespace lce::kernels::avx2 {

LCE_AVX2 std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t k = 0;
  for (; k + 32 <= len; k += 32) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + k));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + k));
    const auto eq = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(x, y)));
    if (eq != 0xFFFFFFFFu) return k + static_cast<std::size_t>(std::countr_zero(~eq));
  }
  for (; k < len; ++k) {
    if (a[k] != b[k]) return k;
  }
  return len;
}

LCE_AVX2 void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count) {
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k + shift));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_min_epu32(lo, hi));
  }
  for (; k < count; ++k) dst[k] = src[k] < src[k + shift] ? src[k] : src[k + shift];
}

LCE_AVX2 std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold) {
  if (threshold == 0) return 0;
  // v < threshold  <=>  min(v, threshold - 1) == v
  const __m256i cap = _mm256_set1_epi32(static_cast<int>(threshold - 1));
  std::size_t total = 0;
  std::size_t k = 0;
  for (; k + 8 <= count; k += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values + k));
    const __m256i below = _mm256_cmpeq_epi32(_mm256_min_epu32(v, cap), v);
    total += static_cast<std::size_t>(std::popcount(
        static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(below)))));
  }
  for (; k < count; ++k) total += values[k] < threshold;
  return total;
}

}  // namespace lce::kernels::avx2

#endif
