#include <doctest.h>

#include <random>
#include <vector>

#include "lce/fastdiv.hpp"
#include "lce/kernels.hpp"

using namespace lce::kernels;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

struct RestoreIsa {
  Isa saved = active_isa();
  ~RestoreIsa() { force_isa(saved); }
};

}  // namespace

TEST_CASE("scalar is always available and dispatch rejects missing targets") {
  RestoreIsa restore;
  CHECK(isa_available(Isa::scalar));
  CHECK(force_isa(Isa::scalar));
  CHECK(active_isa() == Isa::scalar);
#if defined(__x86_64__)
  CHECK_FALSE(force_isa(Isa::neon));
  CHECK(active_isa() == Isa::scalar);
#endif
}

TEST_CASE("mismatch variants agree with the scalar reference") {
  RestoreIsa restore;
  std::mt19937_64 rng(11);
  for (Isa isa : available()) {
    REQUIRE(force_isa(isa));
    CAPTURE(to_string(isa));
    for (std::size_t len : {0u, 1u, 7u, 31u, 32u, 33u, 63u, 64u, 65u, 100u, 257u, 1000u}) {
      std::vector<std::uint8_t> a(len), b;
      for (auto& x : a) x = static_cast<std::uint8_t>(rng() % 3);
      for (std::size_t cut = 0; cut <= len; cut += (len / 9) + 1) {
        b = a;
        if (cut < len) b[cut] ^= 0x40;
        const auto want = scalar::mismatch(a.data(), b.data(), len);
        CHECK(want == (cut < len ? cut : len));
        CHECK(mismatch(a, b) == want);
        // Unequal lengths stop at the shorter one.
        CHECK(mismatch(std::span(a), std::span(b).first(cut)) == std::min(want, cut));
      }
    }
  }
}

TEST_CASE("min_shifted variants agree with the scalar reference") {
  RestoreIsa restore;
  std::mt19937_64 rng(12);
  for (Isa isa : available()) {
    REQUIRE(force_isa(isa));
    CAPTURE(to_string(isa));
    for (std::size_t n : {1u, 5u, 8u, 9u, 17u, 100u, 1025u}) {
      std::vector<std::uint32_t> src(n);
      for (auto& x : src) x = static_cast<std::uint32_t>(rng());
      for (std::size_t shift : {0u, 1u, 3u, 8u, 64u}) {
        if (shift >= n) continue;
        const std::size_t count = n - shift;
        std::vector<std::uint32_t> want(count), got(count);
        scalar::min_shifted(want.data(), src.data(), shift, count);
        for (std::size_t k = 0; k < count; ++k) REQUIRE(want[k] == std::min(src[k], src[k + shift]));
        min_shifted(got, src, shift);
        CHECK(got == want);
        // In place.
        auto inplace = src;
        min_shifted(std::span(inplace).first(count), inplace, shift);
        CHECK(std::vector<std::uint32_t>(inplace.begin(), inplace.begin() + count) == want);
      }
    }
  }
}

TEST_CASE("count_below variants agree with the scalar reference") {
  RestoreIsa restore;
  std::mt19937_64 rng(13);
  for (Isa isa : available()) {
    REQUIRE(force_isa(isa));
    for (std::size_t n : {0u, 1u, 7u, 8u, 15u, 16u, 1000u}) {
      std::vector<std::uint32_t> v(n);
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 50) | (rng() % 4 == 0 ? 0x80000000u : 0u);
      for (std::uint32_t thr : {0u, 1u, 25u, 50u, 0x80000000u, 0xFFFFFFFFu}) {
        std::size_t want = 0;
        for (auto x : v) want += x < thr;
        CHECK(scalar::count_below(v.data(), n, thr) == want);
        CHECK(count_below(v, thr) == want);
      }
    }
  }
}

TEST_CASE("leading_zeros table fallback matches the builtin") {
  std::mt19937_64 rng(14);
  CHECK(scalar::leading_zeros(0) == 64);
  CHECK(leading_zeros(0) == 64);
  for (unsigned k = 0; k < 64; ++k) {
    const std::uint64_t x = std::uint64_t{1} << k;
    CHECK(scalar::leading_zeros(x) == 63 - k);
    CHECK(leading_zeros(x | (x - 1)) == 63 - k);
  }
  for (int k = 0; k < 10000; ++k) {
    const std::uint64_t x = rng() >> (rng() % 64);
    if (x == 0) continue;
    CHECK(scalar::leading_zeros(x) == static_cast<unsigned>(__builtin_clzll(x)));
  }
}

TEST_CASE("FastDiv matches hardware division") {
  std::mt19937_64 rng(11);
  std::vector<std::uint32_t> divisors;
  for (std::uint32_t d = 1; d <= 2048; ++d) divisors.push_back(d);
  for (int k = 0; k < 200; ++k) divisors.push_back(static_cast<std::uint32_t>(rng() >> (32 + rng() % 32)) | 1u);
  divisors.push_back(0xFFFFFFFFu);
  for (const std::uint32_t d : divisors) {
    const lce::FastDiv fd(d);
    for (std::uint32_t a = 0; a < 3000; ++a) {
      REQUIRE(fd.div(a) == a / d);
      REQUIRE(fd.mod(a) == a % d);
    }
    for (int k = 0; k < 500; ++k) {
      const auto a = static_cast<std::uint32_t>(rng());
      REQUIRE(fd.div(a) == a / d);
      REQUIRE(fd.mod(a) == a % d);
    }
    for (const std::uint32_t a : {0xFFFFFFFFu, 0xFFFFFFFEu, d, d - 1, d + 1}) {
      REQUIRE(fd.div(a) == a / d);
      REQUIRE(fd.mod(a) == a % d);
    }
  }
}
