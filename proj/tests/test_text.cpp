#include <doctest.h>

#include <numeric>

#include "lce/text.hpp"

using lce::ErrorCode;
using lce::LceError;
using lce::Sentinel;
using lce::Text;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const LceError& e) {
    return e.code();
  }
  FAIL("expected an LceError");
  return ErrorCode::io_error;
}
}  // namespace

TEST_CASE("automatic sentinel remaps in order and terminates the text") {
  const auto t = Text::load("banana");
  CHECK(t.n() == 7);
  CHECK(t.sigma() == 4);  // a, b, n and the sentinel
  CHECK(t.auto_sentinel());
  CHECK(t.at(7) == t.sentinel_code());
  CHECK(t.sentinel_code() == 0);
  CHECK(t.at(2) == 1);  // 'a' is the smallest byte present
  CHECK(t.at(1) == 2);
  CHECK(t.at(3) == 3);
  for (lce::pos_t i = 1; i < t.n(); ++i) CHECK(t.at(i) > t.sentinel_code());
  const auto sub = t.substring(2, 4);
  CHECK(std::string(sub.begin(), sub.end()) == "ana");
  const auto tail = t.substring(6, 7);
  CHECK(tail == std::vector<std::uint8_t>{'a', 0});
}

TEST_CASE("explicit sentinel keeps raw bytes") {
  const auto t = Text::load("abc", Sentinel::explicit_symbol('$'));
  CHECK(t.n() == 4);
  CHECK_FALSE(t.auto_sentinel());
  CHECK(t.at(1) == 'a');
  CHECK(t.at(4) == '$');
  CHECK(t.sigma() == 4);
  const auto all = t.substring(1, 4);
  CHECK(std::string(all.begin(), all.end()) == "abc$");
}

TEST_CASE("load errors") {
  CHECK(code_of([] { Text::load(""); }) == ErrorCode::empty_input);
  CHECK(code_of([] { Text::load("a$b", Sentinel::explicit_symbol('$')); }) == ErrorCode::sentinel_collision);
  std::vector<std::uint8_t> every(256);
  std::iota(every.begin(), every.end(), 0);
  CHECK(code_of([&] { Text::load(std::span<const std::uint8_t>(every)); }) == ErrorCode::alphabet_overflow);
  // 255 distinct bytes still leave room.
  every.pop_back();
  CHECK(Text::load(std::span<const std::uint8_t>(every)).sigma() == 256);
  const auto t = Text::load("ab");
  CHECK(code_of([&] { (void)t.at(0); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { (void)t.at(4); }) == ErrorCode::out_of_range);
  CHECK(code_of([&] { (void)t.substring(2, 4); }) == ErrorCode::out_of_range);
}

TEST_CASE("binary input with NUL bytes round-trips") {
  const std::vector<std::uint8_t> raw = {0, 5, 0, 255, 5};
  const auto t = Text::load(std::span<const std::uint8_t>(raw));
  CHECK(t.n() == 6);
  CHECK(t.sigma() == 4);
  const auto back = t.substring(1, 5);
  CHECK(back == raw);
}
