#include "lce/blockcode.hpp"

#include <algorithm>

namespace lce {

BlockCode BlockCode::from_ranks(CoverIndex cover, std::span<const std::uint32_t> ranks) {
  BlockCode bc;
  bc.cover_ = std::move(cover);
  const auto& segs = bc.cover_.segments();
  const auto nsep = static_cast<std::uint32_t>(segs.size());
  bc.code_.reserve(bc.cover_.code_length());
  std::size_t k = 0;
  for (std::size_t s = 0; s < segs.size(); ++s) {
    for (pos_t b = 0; b < segs[s].blocks; ++b) {
      if (k >= ranks.size() || ranks[k] == 0) {
        throw LceError(ErrorCode::param_out_of_range, "block ranks must be >= 1 and cover every defined block");
      }
      bc.code_.push_back(ranks[k++] - 1 + nsep);
    }
    // Separators sort below every rank and are pairwise distinct.
    bc.code_.push_back(nsep - 1 - static_cast<std::uint32_t>(s));
  }
  if (k != ranks.size()) throw LceError(ErrorCode::param_out_of_range, "too many block ranks");
  bc.build_suffix_structures();
  return bc;
}

void BlockCode::build_suffix_structures() {
  const std::span<const std::uint32_t> s(code_);
  auto sa = suffix_array(s);
  isa_ = inverse_permutation(sa);
  lcp_ = lcp_array(s, std::span<const std::uint32_t>(sa), std::span<const std::uint32_t>(isa_));
  rmq_ = SparseTableMin(lcp_);
}

void BlockCode::save(BinaryWriter& out) const {
  out.put<std::uint32_t>(cover_.t());
  out.put<std::uint32_t>(cover_.n());
  out.put_vector(cover_.cover().members());
  out.put_vector(code_);
}

BlockCode BlockCode::load(BinaryReader& in) {
  const auto t = in.get<std::uint32_t>();
  const auto n = in.get<std::uint32_t>();
  auto members = in.get_vector<std::uint32_t>();
  if (t == 0) BinaryReader::fail("block code with t = 0");
  BlockCode bc;
  try {
    bc.cover_ = CoverIndex(DifferenceCover::from_members(t, std::move(members)), n);
  } catch (const LceError& e) {
    BinaryReader::fail(std::string("block code cover: ") + e.what());
  }
  bc.code_ = in.get_vector<std::uint32_t>();
  if (bc.code_.size() != bc.cover_.code_length()) BinaryReader::fail("block code length mismatch");
  const auto nsep = static_cast<std::uint32_t>(bc.cover_.segments().size());
  for (const auto& seg : bc.cover_.segments()) {
    const std::size_t end = seg.offset + seg.blocks;
    for (std::size_t k = seg.offset; k < end; ++k) {
      if (bc.code_[k] < nsep) BinaryReader::fail("block rank collides with a separator");
    }
    if (bc.code_[end] >= nsep) BinaryReader::fail("missing segment separator");
  }
  bc.build_suffix_structures();
  return bc;
}

BlockPrefixTable::BlockPrefixTable(pos_t t, std::vector<std::uint32_t> adjacent_lcp,
                                   std::vector<std::uint32_t> tail_ranks)
    : t_(t), adjacent_(std::move(adjacent_lcp)), tail_ranks_(std::move(tail_ranks)) {
  if (!adjacent_.empty()) rmq_ = SparseTableMin(adjacent_);
}

void BlockPrefixTable::save(BinaryWriter& out) const {
  out.put<std::uint32_t>(t_);
  out.put_vector(adjacent_);
  out.put_vector(tail_ranks_);
}

BlockPrefixTable BlockPrefixTable::load(BinaryReader& in) {
  const auto t = in.get<std::uint32_t>();
  auto adj = in.get_vector<std::uint32_t>();
  auto tails = in.get_vector<std::uint32_t>();
  for (auto v : adj) {
    if (v > t) BinaryReader::fail("block prefix entry exceeds t");
  }
  for (auto r : tails) {
    if (r > adj.size() + 1) BinaryReader::fail("tail rank out of range");
  }
  return BlockPrefixTable(t, std::move(adj), std::move(tails));
}

}  // namespace lce
