#pragma once
// Long-LCE engine. Every defined t-block at a cover position is replaced by
// its lexicographic rank; the per-residue rank sequences are concatenated
// with distinct separators into code(w), and an LCE on code(w) counts equal
// consecutive blocks, i.e. floor(LCE / t).

#include <optional>
#include <vector>

#include "lce/binary_io.hpp"
#include "lce/diffcover.hpp"
#include "lce/suffix.hpp"

namespace lce {

class BlockCode {
 public:
  BlockCode() = default;

  // rank_of(i) gives the rank (>= 1) of the t-block at cover position i;
  // it is called only for defined blocks, in code order.
  template <typename RankFn>
  static BlockCode build(CoverIndex cover, RankFn&& rank_of) {
    std::vector<std::uint32_t> ranks;
    ranks.reserve(cover.code_length());
    for (const auto& seg : cover.segments()) {
      const pos_t t = cover.t();
      for (pos_t k = 0, i = cover.first_position(seg.residue); k < seg.blocks; ++k, i += t) {
        ranks.push_back(static_cast<std::uint32_t>(rank_of(i)));
      }
    }
    return from_ranks(std::move(cover), ranks);
  }

  // Ranks in code order (segment by segment, without separators).
  static BlockCode from_ranks(CoverIndex cover, std::span<const std::uint32_t> ranks);

  const CoverIndex& cover() const noexcept { return cover_; }
  pos_t t() const noexcept { return cover_.t(); }
  const std::vector<std::uint32_t>& code() const noexcept { return code_; }
  std::size_t separators() const noexcept { return cover_.segments().size(); }

  // 1-based code position of a defined cover block at i.
  pos_t posmap(pos_t i) const noexcept { return cover_.code_index(i) + 1; }
  // Rank of the defined block at cover position i.
  std::uint32_t rank_at(pos_t i) const noexcept {
    return code_[cover_.code_index(i)] - static_cast<std::uint32_t>(separators()) + 1;
  }

  // floor(LCE(i, j) / t) when both positions are in S(t), nullopt otherwise.
  std::optional<pos_t> long_lce(pos_t i, pos_t j) const {
    if (!cover_.in_cover(i) || !cover_.in_cover(j)) return std::nullopt;
    return long_lce_unchecked(i, j);
  }
  // Requires i, j in S(t).
  pos_t long_lce_unchecked(pos_t i, pos_t j) const {
    if (!cover_.block_defined(i) || !cover_.block_defined(j)) return 0;
    if (i == j) return (cover_.n() - (i + t() - 1)) / t() + 1;
    std::uint32_t a = isa_[cover_.code_index(i)], b = isa_[cover_.code_index(j)];
    if (a > b) std::swap(a, b);
    return rmq_.min(a + 1, b);
  }

  std::size_t bytes() const noexcept {
    return (code_.size() + isa_.size() + lcp_.size()) * sizeof(std::uint32_t) + rmq_.bytes();
  }

  void save(BinaryWriter& out) const;
  static BlockCode load(BinaryReader& in);

 private:
  void build_suffix_structures();

  CoverIndex cover_;
  std::vector<std::uint32_t> code_;
  std::vector<std::uint32_t> isa_, lcp_;
  SparseTableMin rmq_;
};

// Lexicographic order over the clipped t-blocks w[i..min(i+t-1, n)] of every
// cover position, with LCPs between neighbouring ranks. Answers
// min(LCE(a, b), t) for cover positions from their ranks alone.
class BlockPrefixTable {
 public:
  BlockPrefixTable() = default;
  // adjacent_lcp[r] = LCP of the blocks ranked r and r + 1 (ranks from 1).
  BlockPrefixTable(pos_t t, std::vector<std::uint32_t> adjacent_lcp, std::vector<std::uint32_t> tail_ranks);

  bool empty() const noexcept { return t_ == 0; }
  std::size_t entries() const noexcept { return adjacent_.size() + tail_ranks_.size(); }
  std::size_t rank_count() const noexcept { return adjacent_.size() + 1; }
  std::size_t tail_count() const noexcept { return tail_ranks_.size(); }
  // Rank of a cover block that runs past the end of the text, i > n - t + 1.
  // tail_ranks[k] belongs to position n - t + 2 + k (0 when not in the cover).
  std::uint32_t tail_rank(pos_t i, pos_t n) const { return tail_ranks_[i - (n - t_ + 2)]; }
  // LCP of the blocks with ranks a and b, capped at t.
  pos_t lcp(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return t_;
    if (a > b) std::swap(a, b);
    return rmq_.min(a - 1, b - 2);
  }

  std::size_t bytes() const noexcept {
    return (adjacent_.size() + tail_ranks_.size()) * sizeof(std::uint32_t) + rmq_.bytes();
  }

  void save(BinaryWriter& out) const;
  static BlockPrefixTable load(BinaryReader& in);

 private:
  pos_t t_ = 0;
  std::vector<std::uint32_t> adjacent_;  // index r - 1 for ranks r, r + 1
  std::vector<std::uint32_t> tail_ranks_;
  SparseTableMin rmq_;
};

}  // namespace lce
