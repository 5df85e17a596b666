#pragma once
// Data-parallel inner loops used by the index builders and the oracles.
//
// Every kernel has a portable scalar reference in lce::kernels::scalar and,
// where the target supports it, vector variants (AVX2 on x86-64, NEON on
// AArch64). The unqualified entry points dispatch once at startup to the best
// variant the CPU reports; LCE_SIMD=scalar|avx2|neon overrides the choice.

#include <cstddef>
#include <cstdint>
#include <span>

namespace lce::kernels {

enum class Isa { scalar, avx2, neon };

const char* to_string(Isa isa) noexcept;

// Returns the index of the first position where a and b differ, or
// min(a.size(), b.size()) when one is a prefix of the other.
std::size_t mismatch(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);

// dst[k] = min(src[k], src[k + shift]) for k in [0, dst.size()).
// Requires src.size() >= dst.size() + shift. dst may alias src.
void min_shifted(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::size_t shift);

// Number of elements strictly below threshold.
std::size_t count_below(std::span<const std::uint32_t> values, std::uint32_t threshold);

// Leading zero count of a 64-bit word (64 for zero).
unsigned leading_zeros(std::uint64_t x) noexcept;

Isa active_isa() noexcept;
bool isa_available(Isa isa) noexcept;
// Switches the dispatch target; returns false (and changes nothing) if the
// CPU cannot run the requested variant.
bool force_isa(Isa isa) noexcept;

namespace scalar {
std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count);
std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold);
// Byte-table count, for targets without a count-leading-zeros instruction.
unsigned leading_zeros(std::uint64_t x) noexcept;
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define LCE_KERNELS_X86 1
namespace avx2 {
std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count);
std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold);
}  // namespace avx2
#endif

#if defined(__aarch64__) || defined(__ARM_NEON)
#define LCE_KERNELS_NEON 1
namespace neon {
std::size_t mismatch(const std::uint8_t* a, const std::uint8_t* b, std::size_t len);
void min_shifted(std::uint32_t* dst, const std::uint32_t* src, std::size_t shift, std::size_t count);
std::size_t count_below(const std::uint32_t* values, std::size_t count, std::uint32_t threshold);
}  // namespace neon
#endif

}  // namespace lce::kernels
