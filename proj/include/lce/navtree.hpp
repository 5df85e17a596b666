#pragma once
// Short-LCE navigation: a spanning tree of the edge-reversed de Bruijn graph
// of order 2t whose nodes are the leaves of TST(w, 2t). Walking d steps up
// from the node of a sampled position deletes d leading symbols, which maps
// any position to a leaf agreeing with it on (at least) its first t symbols.

#include <span>
#include <vector>

#include "lce/binary_io.hpp"
#include "lce/fastdiv.hpp"
#include "lce/level_ancestor.hpp"
#include "lce/tst.hpp"

namespace lce {

class NavTree {
 public:
  NavTree() = default;

  // leaf_of_position maps 0-based text positions to leaves of `tree`, whose
  // depth must be min(2t, n). Scans right to left; the first visit of a node
  // fixes its parent as the node of the next position.
  static NavTree build(std::span<const pos_t> leaf_of_position, const TruncatedSuffixTree& tree, pos_t t,
                       LevelAncestorKind la = LevelAncestorKind::binary_lifting);

  pos_t t() const noexcept { return t_; }
  pos_t n() const noexcept { return n_; }
  std::size_t node_count() const noexcept { return parent_.size(); }
  pos_t root() const noexcept { return root_; }
  pos_t parent(pos_t node) const { return parent_[node]; }
  pos_t depth(pos_t node) const { return depth_[node]; }
  const std::vector<pos_t>& sampled() const noexcept { return sampled_; }

  // Closest sampled position at or left of i (1-based).
  pos_t alpha(pos_t i) const noexcept { return 1 + div_.div(i - 1) * t_; }
  pos_t ancestor(pos_t node, pos_t d) const { return la_.ancestor(node, d); }

  // Leaf of TST(w, 2t) whose string agrees with w[i..] on min(t, n - i + 1) symbols.
  pos_t locate_leaf(pos_t i) const {
    const pos_t k = div_.div(i - 1);
    return la_.ancestor(sampled_[k], i - 1 - k * t_);
  }

  // min(LCE(i, j), t)
  pos_t short_lce(const TruncatedSuffixTree& tree, pos_t i, pos_t j) const {
    const pos_t l = tree.lca_prefix_len(locate_leaf(i), locate_leaf(j));
    return l < t_ ? l : t_;
  }

  LevelAncestorKind la_kind() const noexcept { return la_.kind(); }
  void set_la_kind(LevelAncestorKind kind);

  std::size_t bytes() const noexcept {
    return (parent_.size() + depth_.size() + sampled_.size()) * sizeof(pos_t) + la_.bytes();
  }

  void save(BinaryWriter& out) const;
  static NavTree load(BinaryReader& in, LevelAncestorKind la = LevelAncestorKind::binary_lifting);

 private:
  pos_t t_ = 1;
  FastDiv div_;
  pos_t n_ = 0;
  pos_t root_ = 0;
  std::vector<pos_t> parent_, depth_;  // node ids are TST leaf ranks
  std::vector<pos_t> sampled_;         // node of position 1 + k*t
  LevelAncestor la_;
};

}  // namespace lce
