#include <doctest.h>

#include "lce/lce_index.hpp"
#include "lce/packed.hpp"
#include "support.hpp"

using lce::PackedIndex;
using lce::PackedText;
using lce::pos_t;

namespace {

pos_t scan_bits(const PackedText& pt, pos_t bi, pos_t bj) {
  pos_t l = 0;
  while (bi + l <= pt.bit_length() && bj + l <= pt.bit_length() && pt.bit(bi + l) == pt.bit(bj + l)) ++l;
  return l;
}

}  // namespace

TEST_CASE("binary alphabet packs one bit per symbol") {
  // A third symbol for the sentinel needs two bits.
  const auto text = lce::Text::load("aabaaaaba", lce::Sentinel::explicit_symbol('c'));
  CHECK(PackedText::pack(text).b() == 2);
  // With 'b' as the sentinel the alphabet stays at two symbols.
  const auto two = lce::Text::load("aaaaaaa", lce::Sentinel::explicit_symbol('b'));
  const auto pt = PackedText::pack(two);
  CHECK(pt.b() == 1);
  CHECK(pt.bit_length() == 8);
  for (pos_t i = 1; i <= two.n(); ++i) CHECK(pt.bit(i) == (two.at(i) == 'b'));
}

TEST_CASE("decoding every symbol") {
  for (const auto& raw : {std::string("acgtacggtca"), lce::corpus::random_text(333, 4, 3), lce::corpus::random_text(200, 26, 4)}) {
    const auto text = lce::Text::load(raw);
    const auto pt = PackedText::pack(text);
    unsigned b = 0;
    while ((1u << b) < text.sigma()) ++b;
    CHECK(pt.b() == b);
    for (pos_t i = 1; i <= text.n(); ++i) CHECK(pt.decode(pt.symbol(i)) == text.at(i));
    CHECK(pt.decode(pt.symbol(text.n())) == text.sentinel_code());
  }
}

TEST_CASE("bit_short_lce is the capped bit LCE") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    const auto raw = lce::corpus::random_text(100 + 90 * trial, trial % 2 ? 3u : 2u, 100 + trial);
    const auto text = lce::Text::load(raw);
    for (unsigned ws : {0u, 1u, 13u, 64u}) {
      const auto pt = PackedText::pack(text, ws);
      const pos_t len = pt.bit_length();
      REQUIRE(len <= 2000);
      for (pos_t bi = 1; bi <= len; ++bi) {
        for (pos_t bj = 1; bj <= len; bj += 1 + static_cast<pos_t>(rng() % 3)) {
          REQUIRE(pt.bit_short_lce(bi, bj) == std::min<pos_t>(scan_bits(pt, bi, bj), pt.word_size()));
        }
      }
      CHECK(pt.bit_short_lce(1, 1) == std::min<pos_t>(pt.word_size(), len));
    }
  }
  const auto pt = PackedText::pack(lce::Text::load("ab"));
  CHECK(pt.bit_short_lce(1, 3) == 0);  // 'a' = 01, 'b' = 10
}

TEST_CASE("packed LCE equals the symbol LCE, with the bit sandwich") {
  std::vector<std::string> suite = {"baabbaabbaaabbaabba"};
  for (int k = 0; k < 6; ++k) suite.push_back(lce::corpus::random_text(120, k % 2 ? 4u : 2u, 50 + k));
  for (const auto& raw : suite) {
    const auto w = testing::with_sentinel(raw);
    const auto text = lce::Text::load(raw);
    for (unsigned ws : {0u, 3u, 16u}) {
      const auto px = PackedIndex::build(text, ws);
      const unsigned b = px.text().b();
      for (pos_t i = 1; i <= text.n(); ++i) {
        for (pos_t j = 1; j <= text.n(); ++j) {
          const pos_t want = testing::scan_lce(w, i, j);
          REQUIRE(px.lce(i, j) == want);
          if (i == j) continue;
          const pos_t bits = px.bit_lce((i - 1) * b + 1, (j - 1) * b + 1);
          CHECK(b * want <= bits);
          CHECK(bits <= b * want + b - 1);
        }
      }
    }
  }
}

TEST_CASE("cross-check with the main index and a periodic text") {
  const auto text = lce::Text::load("baabbaabbaaabbaabba");
  const auto ix = lce::LceIndex::build(text, 3, lce::BuildOptions{.packed = true});
  for (pos_t i = 1; i <= text.n(); ++i) {
    for (pos_t j = 1; j <= text.n(); ++j) CHECK(ix.lce_packed(i, j) == ix.lce(i, j));
  }
  std::string periodic;
  for (int k = 0; k < 64; ++k) periodic += "ab";
  const auto w = testing::with_sentinel(periodic);
  const auto px = PackedIndex::build(lce::Text::load(periodic));
  std::mt19937_64 rng(2);
  for (int k = 0; k < 5000; ++k) {
    const pos_t i = static_cast<pos_t>(rng() % w.size()) + 1, j = static_cast<pos_t>(rng() % w.size()) + 1;
    REQUIRE(px.lce(i, j) == testing::scan_lce(w, i, j));
  }
  CHECK_THROWS_AS(px.lce(0, 1), lce::LceError);
  CHECK_THROWS_AS(px.lce(1, static_cast<pos_t>(w.size()) + 1), lce::LceError);
}

TEST_CASE("packing errors and save/load") {
  CHECK_THROWS_AS(PackedText::pack(lce::Text::load("ab"), 65), lce::LceError);
  const auto text = lce::Text::load(lce::corpus::thue_morse(500));
  const auto px = PackedIndex::build(text, 20);
  lce::BinaryWriter out;
  px.save(out);
  lce::BinaryReader in(out.bytes());
  const auto back = PackedIndex::load(in);
  CHECK(in.done());
  for (pos_t i = 1; i <= text.n(); i += 7) {
    for (pos_t j = 1; j <= text.n(); j += 5) CHECK(back.lce(i, j) == px.lce(i, j));
  }
}
