#include "lce/kernels.hpp"

#ifdef LCE_KERNELS_NEON

#include <arm_neon.h>

namespace lce::kernels::neon {

std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t k = 0;
  for (; k + 16 <= len; k += 16) {
    const uint8x16_t eq = vceqq_u8(vld1q_u8(a + k), vld1q_u8(b + k));
    if (vminvq_u8(eq) != 0xFF) break;
  }
  for (; k < len; ++k) {
    if (a[k] != b[k]) return k;
  }
  return len;
}

void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count) {
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    vst1q_u32(dst + k, vminq_u32(vld1q_u32(src + k), vld1q_u32(src + k + shift)));
  }
  for (; k < count; ++k) dst[k] = src[k] < src[k + shift] ? src[k] : src[k + shift];
}

std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold) {
  const uint32x4_t thr = vdupq_n_u32(threshold);
  std::size_t total = 0;
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    // lanes are all-ones when below; shifting down leaves 1 per hit
    const uint32x4_t hits = vshrq_n_u32(vcltq_u32(vld1q_u32(values + k), thr), 31);
    total += vaddvq_u32(hits);
  }
  for (; k < count; ++k) total += values[k] < threshold;
  return total;
}

}  // namespace lce::kernels::neon

#endif
