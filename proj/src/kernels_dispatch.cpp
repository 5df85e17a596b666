#include "lce/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <string_view>

namespace lce::kernels {

namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#ifdef LCE_KERNELS_X86
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#ifdef LCE_KERNELS_NEON
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa pick_default() noexcept {
  if (const char* env = std::getenv("LCE_SIMD")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && cpu_has(Isa::avx2)) return Isa::avx2;
    if (want == "neon" && cpu_has(Isa::neon)) return Isa::neon;
  }
  if (cpu_has(Isa::avx2)) return Isa::avx2;
  if (cpu_has(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{pick_default()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "?";
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

bool isa_available(Isa isa) noexcept { return cpu_has(isa); }

bool force_isa(Isa isa) noexcept {
  if (!cpu_has(isa)) return false;
  current().store(isa, std::memory_order_relaxed);
  return true;
}

std::size_t mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  const std::size_t len = a.size() < b.size() ? a.size() : b.size();
  switch (active_isa()) {
#ifdef LCE_KERNELS_X86
    case Isa::avx2: return avx2::mismatch(a.data(), b.data(), len);
#endif
#ifdef LCE_KERNELS_NEON
    case Isa::neon: return neon::mismatch(a.data(), b.data(), len);
#endif
    default: return scalar::mismatch(a.data(), b.data(), len);
  }
}

void min_shifted(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::size_t shift) {
  switch (active_isa()) {
#ifdef LCE_KERNELS_X86
    case Isa::avx2: return avx2::min_shifted(dst.data(), src.data(), shift, dst.size());
#endif
#ifdef LCE_KERNELS_NEON
    case Isa::neon: return neon::min_shifted(dst.data(), src.data(), shift, dst.size());
#endif
    default: return scalar::min_shifted(dst.data(), src.data(), shift, dst.size());
  }
}

std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t threshold) {
  switch (active_isa()) {
#ifdef LCE_KERNELS_X86
    case Isa::avx2: return avx2::count_below(values.data(), values.size(), threshold);
#endif
#ifdef LCE_KERNELS_NEON
    case Isa::neon: return neon::count_below(values.data(), values.size(), threshold);
#endif
    default: return scalar::count_below(values.data(), values.size(), threshold);
  }
}

unsigned leading_zeros(std::uint64_t x) noexcept {
#if defined(__GNUC__) || defined(__clang__) || defined(_MSC_VER)
  return static_cast<unsigned>(std::countl_zero(x));
#else
  return scalar::leading_zeros(x);
#endif
}

}  // namespace lce::kernels
