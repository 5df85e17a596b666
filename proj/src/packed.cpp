#include "lce/packed.hpp"

#include <algorithm>

#include "lce/kernels.hpp"

namespace lce {

PackedText PackedText::pack(const Text& text, unsigned word_size) {
  if (text.sigma() < 2) throw LceError(ErrorCode::param_out_of_range, "packing needs at least two symbols");
  PackedText pt;
  pt.n_ = text.n();
  std::array<int, 256> dense{};
  dense.fill(-1);
  for (auto c : text.codes()) dense[c] = 0;
  for (unsigned c = 0; c < 256; ++c) {
    if (dense[c] == 0) {
      dense[c] = static_cast<int>(pt.alphabet_.size());
      pt.alphabet_.push_back(static_cast<std::uint8_t>(c));
    }
  }
  const auto sigma = static_cast<unsigned>(pt.alphabet_.size());
  pt.b_ = 1;
  while ((1u << pt.b_) < sigma) ++pt.b_;
  const std::uint64_t bits = std::uint64_t{pt.n_} * pt.b_;
  if (bits >= kNone) throw LceError(ErrorCode::param_out_of_range, "packed text exceeds 2^32 bits");
  if (word_size == 0) word_size = static_cast<unsigned>(std::min<std::uint64_t>(64, bits));
  if (word_size < 1 || word_size > 64) throw LceError(ErrorCode::param_out_of_range, "word size must be in [1, 64]");
  pt.word_size_ = word_size;

  pt.words_.assign(bits / 64 + 2, 0);
  std::uint64_t p = 0;
  for (auto c : text.codes()) {
    const auto v = static_cast<std::uint64_t>(dense[c]);
    for (int k = static_cast<int>(pt.b_) - 1; k >= 0; --k, ++p) {
      if ((v >> k) & 1u) pt.words_[p >> 6] |= std::uint64_t{1} << (63 - (p & 63));
    }
  }
  return pt;
}

unsigned PackedText::symbol(pos_t i) const noexcept {
  return static_cast<unsigned>(window((i - 1) * b_ + 1) >> (64 - b_));
}

pos_t PackedText::bit_short_lce(pos_t bi, pos_t bj) const {
  const pos_t len = bit_length();
  const pos_t hi = std::max(bi, bj);
  if (hi > len) return 0;
  const pos_t cap = std::min<pos_t>(word_size_, len - hi + 1);
  const pos_t l = kernels::leading_zeros(window(bi) ^ window(bj));
  return std::min(l, cap);
}

void PackedText::save(BinaryWriter& out) const {
  out.put<std::uint32_t>(n_);
  out.put<std::uint8_t>(static_cast<std::uint8_t>(b_));
  out.put<std::uint8_t>(static_cast<std::uint8_t>(word_size_));
  out.put_vector(alphabet_);
  out.put_vector(words_);
}

PackedText PackedText::load(BinaryReader& in) {
  PackedText pt;
  pt.n_ = in.get<std::uint32_t>();
  pt.b_ = in.get<std::uint8_t>();
  pt.word_size_ = in.get<std::uint8_t>();
  pt.alphabet_ = in.get_vector<std::uint8_t>();
  pt.words_ = in.get_vector<std::uint64_t>();
  if (pt.b_ < 1 || pt.b_ > 8 || pt.word_size_ < 1 || pt.word_size_ > 64) BinaryReader::fail("packed parameters");
  if (pt.alphabet_.size() < 2 || pt.alphabet_.size() > (std::size_t{1} << pt.b_)) BinaryReader::fail("packed alphabet");
  const std::uint64_t bits = std::uint64_t{pt.n_} * pt.b_;
  if (pt.words_.size() != bits / 64 + 2) BinaryReader::fail("packed word count");
  return pt;
}

BlockCode PackedIndex::build_code(const PackedText& pt) {
  const pos_t len = pt.bit_length();
  const unsigned w = pt.word_size();
  CoverIndex cover(DifferenceCover::build(w), len);
  const std::uint64_t mask = w == 64 ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> w);
  // Blocks are w-bit integers; their numeric order is their lexicographic order.
  std::vector<std::uint64_t> values;
  values.reserve(cover.code_length());
  for (const auto& seg : cover.segments()) {
    for (pos_t k = 0, i = cover.first_position(seg.residue); k < seg.blocks; ++k, i += w) {
      values.push_back(pt.window(i) & mask);
    }
  }
  std::vector<std::uint64_t> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint32_t> ranks(values.size());
  for (std::size_t k = 0; k < values.size(); ++k) {
    ranks[k] = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), values[k]) - distinct.begin()) + 1;
  }
  return BlockCode::from_ranks(std::move(cover), ranks);
}

PackedIndex PackedIndex::build(const Text& text, unsigned word_size) {
  PackedIndex ix;
  ix.pt_ = PackedText::pack(text, word_size);
  ix.bc_ = build_code(ix.pt_);
  return ix;
}

pos_t PackedIndex::bit_lce(pos_t bi, pos_t bj) const {
  const pos_t len = pt_.bit_length();
  if (bi < 1 || bj < 1 || bi > len || bj > len) throw LceError(ErrorCode::out_of_range, "bit position out of range");
  if (bi == bj) return len - bi + 1;
  const pos_t w = pt_.word_size();
  const pos_t l1 = pt_.bit_short_lce(bi, bj);
  if (l1 < w) return l1;
  const pos_t delta = bc_.cover().cover().h(bi, bj);
  const pos_t l2 = bc_.long_lce_unchecked(bi + delta, bj + delta);
  const pos_t l3 = pt_.bit_short_lce(bi + delta + w * l2, bj + delta + w * l2);
  return delta + w * l2 + l3;
}

pos_t PackedIndex::lce(pos_t i, pos_t j) const {
  const pos_t n = pt_.n();
  if (i < 1 || j < 1 || i > n || j > n) throw LceError(ErrorCode::out_of_range, "position out of range");
  if (i == j) return n - i + 1;
  const pos_t b = pt_.b();
  return bit_lce((i - 1) * b + 1, (j - 1) * b + 1) / b;
}

void PackedIndex::save(BinaryWriter& out) const {
  pt_.save(out);
  bc_.save(out);
}

PackedIndex PackedIndex::load(BinaryReader& in) {
  PackedIndex ix;
  ix.pt_ = PackedText::load(in);
  ix.bc_ = BlockCode::load(in);
  if (ix.bc_.t() != ix.pt_.word_size() || ix.bc_.cover().n() != ix.pt_.bit_length()) {
    BinaryReader::fail("packed block code does not match the bit string");
  }
  return ix;
}

}  // namespace lce
