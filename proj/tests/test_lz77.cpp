#include <doctest.h>

#include "lce/lz77.hpp"
#include "support.hpp"

namespace {

void check_against_brute(const std::string& raw) {
  const auto text = lce::Text::load(raw);
  const auto f = lce::lz77_factorize(text);
  const auto want = testing::brute_lz77(testing::with_sentinel(raw));
  REQUIRE(f.factors.size() == want.size());
  CHECK(f.z() + 1 == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    CAPTURE(raw);
    CAPTURE(k);
    CHECK(f.factors[k].start == want[k].start);
    CHECK(f.factors[k].len == want[k].len);
    CHECK(f.factors[k].src == want[k].src);
    if (want[k].src == 0) CHECK(f.factors[k].symbol == text.at(static_cast<lce::pos_t>(want[k].start)));
  }
}

}  // namespace

TEST_CASE("worked example: six factors") {
  const std::string raw = "abababcabababcabababcd";
  const auto text = lce::Text::load(raw);
  const auto f = lce::lz77_factorize(text);
  CHECK(f.z() == 6);
  CHECK(f.z_with_sentinel() == 7);
  const std::vector<std::string> want = {"a", "b", "abab", "c", "abababcabababc", "d"};
  for (std::size_t k = 0; k < want.size(); ++k) {
    const auto& fac = f.factors[k];
    CHECK(raw.substr(fac.start - 1, fac.len) == want[k]);
  }
  CHECK(f.factors[2].src == 1);  // overlapping copy of "ab"
  CHECK(f.factors[4].src == 1);
  CHECK(f.factors[6].literal());
}

TEST_CASE("unary and periodic strings") {
  const auto f = lce::lz77_factorize(lce::Text::load(std::string(50, 'a')));
  REQUIRE(f.z() == 2);
  CHECK(f.factors[1].len == 49);
  CHECK(f.factors[1].src == 1);
}

TEST_CASE("matches the quadratic parser") {
  for (const auto& raw : testing::small_suite(9, 10)) check_against_brute(raw);
  check_against_brute(lce::corpus::fibonacci(610));
  check_against_brute(lce::corpus::random_text(500, 26, 5));
}

TEST_CASE("Fibonacci words have logarithmically many factors") {
  const auto f = lce::lz77_factorize(lce::Text::load(lce::corpus::fibonacci(10946)));
  CHECK(f.z() <= 30);
}
