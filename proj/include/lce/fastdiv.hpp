#pragma once
// Division and remainder of 32-bit values by a fixed divisor through one
// 64x64 -> 128-bit multiply with a precomputed reciprocal (Lemire et al.).

#include <cstdint>

namespace lce {

class FastDiv {
 public:
  FastDiv() : FastDiv(1) {}
  explicit FastDiv(std::uint32_t d) : d_(d), m_(~std::uint64_t{0} / d + 1) {}

  std::uint32_t divisor() const noexcept { return d_; }

  std::uint32_t div(std::uint32_t a) const noexcept {
    if (d_ == 1) return a;  // the reciprocal wraps to 0
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(m_) * a) >> 64);
  }
  std::uint32_t mod(std::uint32_t a) const noexcept {
    const std::uint64_t low = m_ * a;
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(low) * d_) >> 64);
  }

 private:
  std::uint32_t d_;
  std::uint64_t m_;
};

}  // namespace lce
