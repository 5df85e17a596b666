#pragma once
// Small-alphabet variant: the text as a bit string of n*b bits, b = ceil(log2
// sigma). Short extensions come from one word-sized XOR, long ones from a
// block code over word-sized bit blocks; the symbol LCE is the bit LCE
// divided by b.

#include <array>
#include <vector>

#include "lce/blockcode.hpp"
#include "lce/text.hpp"

namespace lce {

class PackedText {
 public:
  PackedText() = default;
  // word_size in [1, 64]; 0 picks min(64, n*b).
  static PackedText pack(const Text& text, unsigned word_size = 0);

  pos_t n() const noexcept { return n_; }
  unsigned b() const noexcept { return b_; }
  unsigned word_size() const noexcept { return word_size_; }
  pos_t bit_length() const noexcept { return n_ * b_; }

  // Bit at 1-based bit position p.
  bool bit(pos_t p) const noexcept { return (words_[(p - 1) >> 6] >> (63 - ((p - 1) & 63))) & 1u; }
  // Dense symbol code (0..sigma-1) at 1-based symbol position i.
  unsigned symbol(pos_t i) const noexcept;
  // Original code of a dense symbol.
  std::uint8_t decode(unsigned symbol) const noexcept { return alphabet_[symbol]; }

  // 64 bits starting at 1-based bit position p, most significant first;
  // bits past the end read as zero.
  std::uint64_t window(pos_t p) const noexcept {
    const std::size_t off = p - 1;
    const std::size_t k = off >> 6;
    const unsigned s = static_cast<unsigned>(off & 63);
    const std::uint64_t hi = words_[k] << s;
    return s == 0 ? hi : hi | (words_[k + 1] >> (64 - s));
  }

  // min(bitLCE(bi, bj), word_size); 0 if either position is past the end.
  pos_t bit_short_lce(pos_t bi, pos_t bj) const;

  std::size_t bytes() const noexcept { return words_.size() * sizeof(std::uint64_t) + alphabet_.size(); }

  void save(BinaryWriter& out) const;
  static PackedText load(BinaryReader& in);

 private:
  pos_t n_ = 0;
  unsigned b_ = 1;
  unsigned word_size_ = 64;
  std::vector<std::uint64_t> words_;  // one trailing zero word for unaligned fetches
  std::vector<std::uint8_t> alphabet_;
};

class PackedIndex {
 public:
  PackedIndex() = default;
  static PackedIndex build(const Text& text, unsigned word_size = 0);

  const PackedText& text() const noexcept { return pt_; }
  const BlockCode& block_code() const noexcept { return bc_; }
  pos_t n() const noexcept { return pt_.n(); }

  // LCE of the bit suffixes starting at bit positions bi and bj.
  pos_t bit_lce(pos_t bi, pos_t bj) const;
  // Symbol LCE, floor(bitLCE((i-1)b+1, (j-1)b+1) / b).
  pos_t lce(pos_t i, pos_t j) const;

  std::size_t bytes() const noexcept { return pt_.bytes() + bc_.bytes(); }

  void save(BinaryWriter& out) const;
  static PackedIndex load(BinaryReader& in);

 private:
  static BlockCode build_code(const PackedText& pt);

  PackedText pt_;
  BlockCode bc_;
};

}  // namespace lce
