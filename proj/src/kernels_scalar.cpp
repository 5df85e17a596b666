#include "lce/kernels.hpp"

#include <algorithm>
#include <array>
#include <cstring>

namespace lce::kernels::scalar {

std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  std::size_t k = 0;
  // Word-at-a-time compare, then locate the byte inside the first unequal word.
  for (; k + 8 <= len; k += 8) {
    std::uint64_t x, y;
    std::memcpy(&x, a + k, 8);
    std::memcpy(&y, b + k, 8);
    if (x != y) break;
  }
  for (; k < len; ++k) {
    if (a[k] != b[k]) return k;
  }
  return len;
}

void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) dst[k] = std::min(src[k], src[k + shift]);
}

std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < count; ++k) c += values[k] < threshold;
  return c;
}

namespace {
constexpr std::array<std::uint8_t, 256> make_byte_clz() {
  std::array<std::uint8_t, 256> table{};
  table[0] = 8;
  for (unsigned v = 1; v < 256; ++v) {
    std::uint8_t z = 0;
    for (unsigned bit = 0x80; (v & bit) == 0; bit >>= 1) ++z;
    table[v] = z;
  }
  return table;
}
constexpr auto kByteClz = make_byte_clz();
}  // namespace

unsigned leading_zeros(std::uint64_t x) noexcept {
  unsigned n = 0;
  for (int shift = 56; shift >= 0; shift -= 8) {
    const auto byte = static_cast<std::uint8_t>(x >> shift);
    if (byte != 0) return n + kByteClz[byte];
    n += 8;
  }
  return 64;
}

}  // namespace lce::kernels::scalar
