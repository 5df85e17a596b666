#pragma once
// t-difference-covers of Z_t and the induced t-cover S(t) of [1..n].

#include <optional>
#include <span>
#include <vector>

#include "lce/common.hpp"
#include "lce/fastdiv.hpp"

namespace lce {

class DifferenceCover {
 public:
  // Block construction: residues {0..r-1} plus the multiples of r reduced
  // mod t, r = ceil(sqrt(t)). Size at most 2*ceil(sqrt(t)) + 1.
  static DifferenceCover build(pos_t t);
  // Wraps an explicit member set; throws param_out_of_range unless it covers Z_t.
  static DifferenceCover from_members(pos_t t, std::vector<pos_t> members);

  pos_t t() const noexcept { return t_; }
  const std::vector<pos_t>& members() const noexcept { return members_; }
  bool contains(pos_t residue) const noexcept { return index_of_[residue] != kNone; }
  // Position of residue in members(), or kNone.
  pos_t index_of(pos_t residue) const noexcept { return index_of_[residue]; }
  // hdelta[d] is the smallest x in D with (x + d) mod t in D.
  pos_t hdelta(pos_t d) const noexcept { return hdelta_[d]; }

  // Offset delta in [0, t) with i + delta and j + delta both in S(t).
  pos_t h(pos_t i, pos_t j) const noexcept {
    const pos_t ri = div_.mod(i), rj = div_.mod(j);
    const pos_t d = rj >= ri ? rj - ri : rj + t_ - ri;
    const pos_t x = hdelta_[d];
    return x >= ri ? x - ri : x + t_ - ri;
  }
  const FastDiv& divider() const noexcept { return div_; }

 private:
  DifferenceCover(pos_t t, std::vector<pos_t> members);

  pos_t t_ = 1;
  FastDiv div_;
  std::vector<pos_t> members_;
  std::vector<pos_t> index_of_;
  std::vector<pos_t> hdelta_;
};

// S(t) over [1..n] with the bookkeeping that lays its t-blocks out as the
// per-residue segments of the block code. Block i is defined when i + t - 1 <= n.
class CoverIndex {
 public:
  CoverIndex() = default;
  CoverIndex(DifferenceCover dc, pos_t n);

  const DifferenceCover& cover() const noexcept { return dc_; }
  pos_t t() const noexcept { return dc_.t(); }
  pos_t n() const noexcept { return n_; }

  bool in_cover(pos_t i) const noexcept { return i >= 1 && i <= n_ && dc_.contains(dc_.divider().mod(i)); }
  bool block_defined(pos_t i) const noexcept { return i + dc_.t() - 1 <= n_; }
  std::size_t cover_size() const noexcept { return cover_size_; }

  // First position with residue x (x itself, or t for residue 0).
  pos_t first_position(pos_t residue) const noexcept { return residue == 0 ? dc_.t() : residue; }
  // Index of i within its residue's progression.
  pos_t seg_rank(pos_t i) const noexcept {
    const pos_t q = dc_.divider().div(i);
    return q * dc_.t() == i ? q - 1 : q;
  }

  // Segments of the block code, in ascending residue order; empty segments
  // (no defined block) are skipped and own no separator.
  struct Segment {
    pos_t residue;
    pos_t offset;  // 0-based start inside the code string
    pos_t blocks;  // number of defined blocks
  };
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  // 0-based offset of residue x's segment; kNone if it has no defined block.
  pos_t seg_offset(pos_t residue) const noexcept { return seg_of_residue_[residue]; }
  const Segment* segment_of(pos_t i) const noexcept {
    const pos_t s = seg_index_[dc_.divider().mod(i)];
    return s == kNone ? nullptr : &segments_[s];
  }
  // Code length: defined blocks plus one separator per segment.
  std::size_t code_length() const noexcept { return code_length_; }
  // 0-based code index of a defined cover block at i.
  pos_t code_index(pos_t i) const noexcept {
    const pos_t q = dc_.divider().div(i);
    const pos_t r = i - q * dc_.t();
    return seg_of_residue_[r] + (r == 0 ? q - 1 : q);
  }

 private:
  DifferenceCover dc_ = DifferenceCover::build(1);
  pos_t n_ = 0;
  std::size_t cover_size_ = 0;
  std::size_t code_length_ = 0;
  std::vector<Segment> segments_;
  std::vector<pos_t> seg_of_residue_;
  std::vector<pos_t> seg_index_;
};

}  // namespace lce
