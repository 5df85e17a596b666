#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "lce/oracle.hpp"
#include "lce/suffix.hpp"
#include "support.hpp"

using lce::pos_t;

TEST_CASE("suffix array matches sorted suffixes") {
  for (const auto& raw : testing::small_suite(7, 6)) {
    const auto w = testing::with_sentinel(raw);
    const auto text = lce::Text::load(raw);
    const auto sa = lce::suffix_array(text.codes());
    std::vector<std::uint32_t> want(w.size());
    std::iota(want.begin(), want.end(), 0);
    std::sort(want.begin(), want.end(), [&](auto a, auto b) { return w.compare(a, std::string::npos, w, b) < 0; });
    REQUIRE(sa == want);
    const auto isa = lce::inverse_permutation(sa);
    const auto lcp = lce::lcp_array(text.codes(), std::span<const std::uint32_t>(sa), std::span<const std::uint32_t>(isa));
    CHECK(lcp[0] == 0);
    for (std::size_t r = 1; r < sa.size(); ++r) {
      CHECK(lcp[r] == testing::scan_lce(w, sa[r - 1] + 1, sa[r] + 1));
    }
  }
}

TEST_CASE("suffix array without terminator orders prefixes first") {
  const std::vector<std::uint32_t> s = {1, 1, 1};
  CHECK(lce::suffix_array(std::span<const std::uint32_t>(s)) == std::vector<std::uint32_t>{2, 1, 0});
}

TEST_CASE("sparse table minimum") {
  std::mt19937_64 rng(3);
  for (std::size_t n : {1u, 2u, 3u, 17u, 64u, 200u}) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = static_cast<std::uint32_t>(rng() % 1000);
    const lce::SparseTableMin rmq(v);
    CHECK(rmq.size() == n);
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo; hi < n; ++hi) {
        REQUIRE(rmq.min(lo, hi) == *std::min_element(v.begin() + lo, v.begin() + hi + 1));
      }
    }
  }
}

TEST_CASE("naive scan examples") {
  const auto text = lce::Text::load("abababcabababcabababcd");
  CHECK(lce::naive_lce(text, 1, 8) == 14);
  CHECK(lce::naive_lce(text, 1, 15) == 7);
  CHECK(lce::naive_lce(text, 2, 9) == 13);
  CHECK(lce::naive_lce(text, 5, 5) == text.n() - 5 + 1);
  CHECK(lce::naive_lce(text, 1, 2) == 0);
  CHECK_THROWS_AS(lce::naive_lce(text, 0, 1), lce::LceError);
  CHECK_THROWS_AS(lce::naive_lce(text, 1, text.n() + 1), lce::LceError);
}

TEST_CASE("ISA oracle equals the scan on every pair") {
  auto suite = testing::small_suite(7, 4);
  suite.push_back(lce::corpus::random_text(400, 2, 77));
  suite.push_back(lce::corpus::random_text(400, 26, 78));
  suite.push_back(lce::corpus::fibonacci(377));
  for (const auto& raw : suite) {
    const auto w = testing::with_sentinel(raw);
    const auto text = lce::Text::load(raw);
    const lce::IsaOracle o(text);
    const auto n = text.n();
    for (pos_t i = 1; i <= n; ++i) {
      for (pos_t j = 1; j <= n; ++j) {
        const auto want = testing::scan_lce(w, i, j);
        REQUIRE(o.lce(i, j) == want);
        REQUIRE(lce::naive_lce(text, i, j) == want);
      }
    }
    // Adjacent suffix array rows read the LCP array directly.
    for (pos_t r = 1; r < n; ++r) CHECK(o.lce(o.sa()[r - 1] + 1, o.sa()[r] + 1) == o.lcp()[r]);
    // Extremes: the minimum over the whole LCP array.
    const auto lo = *std::min_element(o.lcp().begin() + 1, o.lcp().end());
    if (n > 1) CHECK(o.lce(o.sa().front() + 1, o.sa().back() + 1) == lo);
  }
}
