#pragma once
// q-truncated suffix tree: the compacted trie of Substr_q(w), one leaf per
// distinct clipped suffix w[i..min(i+q-1, n)], leaves in lexicographic order.

#include <optional>
#include <span>
#include <vector>

#include "lce/binary_io.hpp"
#include "lce/suffix.hpp"
#include "lce/text.hpp"

namespace lce {

class TruncatedSuffixTree {
 public:
  static constexpr pos_t kRoot = 0;

  TruncatedSuffixTree() = default;

  // Builds from the suffix and LCP arrays of the text, grouping suffixes that
  // agree on their first q symbols. Edge labels initially point into a copy of
  // the whole text; compact_reference() replaces it. If leaf_of_position is
  // given it receives, for every 0-based text position, the rank of its leaf.
  static TruncatedSuffixTree build(const Text& text, pos_t q, std::vector<pos_t>* leaf_of_position = nullptr);

  // Rewrites the reference string as the concatenation of the merged leftmost
  // occurrence intervals of the leaves and remaps every edge into it.
  void compact_reference();

  // Splits edges so every node at string depth t is explicit, ranks the depth-t
  // nodes 1..K in lexicographic order, and returns per-leaf ranks (0 for
  // leaves shallower than t). Requires t <= q.
  const std::vector<pos_t>& mark_tgram_nodes(pos_t t);

  // String depth of the LCA of two leaves (leaf ids are lexicographic ranks).
  pos_t lca_prefix_len(pos_t leaf_a, pos_t leaf_b) const {
    std::uint32_t a = euler_first_[leaf_a], b = euler_first_[leaf_b];
    if (a > b) std::swap(a, b);
    return euler_rmq_.min(a, b);
  }

  pos_t q() const noexcept { return q_; }
  std::size_t node_count() const noexcept { return parent_.size(); }
  std::size_t leaf_count() const noexcept { return leaves_.size(); }
  pos_t leaf_node(pos_t leaf) const { return leaves_[leaf]; }
  // Leaf rank of a node, kNone for internal nodes.
  pos_t leaf_of_node(pos_t node) const { return leaf_rank_of_node_[node]; }
  pos_t parent(pos_t node) const { return parent_[node]; }
  pos_t string_depth(pos_t node) const { return depth_[node]; }
  std::span<const pos_t> children(pos_t node) const {
    return std::span<const pos_t>(child_list_).subspan(child_begin_[node], child_begin_[node + 1] - child_begin_[node]);
  }
  std::span<const std::uint8_t> label(pos_t node) const {
    return std::span<const std::uint8_t>(refstr_).subspan(ref_start_[node], ref_len_[node]);
  }
  // str(node), decoded from the reference string.
  std::vector<std::uint8_t> decode(pos_t node) const;
  std::vector<std::uint8_t> decode_leaf(pos_t leaf) const { return decode(leaves_[leaf]); }

  // Descends from the root by pattern; returns the leaf spelling exactly it.
  std::optional<pos_t> find_leaf(std::span<const std::uint8_t> pattern) const;

  std::span<const std::uint8_t> refstr() const noexcept { return refstr_; }
  bool compacted() const noexcept { return compacted_; }
  pos_t tgram_length() const noexcept { return tgram_len_; }
  std::size_t tgram_count() const noexcept { return tgram_count_; }
  const std::vector<pos_t>& tgram_ranks() const noexcept { return tgram_rank_; }

  std::size_t bytes() const noexcept;

  void save(BinaryWriter& out) const;
  static TruncatedSuffixTree load(BinaryReader& in);

 private:
  pos_t add_node(pos_t parent, pos_t depth);
  void rebuild_derived();

  pos_t q_ = 0;
  std::vector<pos_t> parent_, depth_, ref_start_, ref_len_;
  std::vector<pos_t> leaves_;  // node id per leaf rank
  std::vector<std::uint8_t> refstr_;
  std::vector<pos_t> leaf_locc_;  // 0-based leftmost occurrence per leaf; dropped after compaction
  bool compacted_ = false;

  // derived
  std::vector<pos_t> child_begin_, child_list_;
  std::vector<pos_t> leaf_rank_of_node_;
  std::vector<std::uint32_t> euler_first_;
  SparseTableMin euler_rmq_;

  pos_t tgram_len_ = 0;
  std::size_t tgram_count_ = 0;
  std::vector<pos_t> tgram_rank_;
};

}  // namespace lce
