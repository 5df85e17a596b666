#pragma once
// Level-ancestor queries on a rooted forest given by parent pointers, for
// distances below a fixed bound.

#include <span>
#include <vector>

#include "lce/common.hpp"

namespace lce {

enum class LevelAncestorKind : std::uint8_t {
  binary_lifting,  // O(V log D) words, O(log D) query
  ladder,          // jump pointers + long-path ladders, O(1) query
};

class LevelAncestor {
 public:
  LevelAncestor() = default;
  // parent[root] == kNone. Queries must satisfy d < max_distance and d <= depth(v).
  LevelAncestor(std::span<const pos_t> parent, std::span<const pos_t> depth, pos_t max_distance,
                LevelAncestorKind kind);

  pos_t ancestor(pos_t v, pos_t d) const {
    if (d == 0) return v;
    if (kind_ == LevelAncestorKind::binary_lifting) {
      for (unsigned k = 0; d != 0; ++k, d >>= 1) {
        if (d & 1) v = jump_[k * nodes_ + v];
      }
      return v;
    }
    const unsigned k = 31u - static_cast<unsigned>(__builtin_clz(d));
    const pos_t u = jump_[k * nodes_ + v];
    const pos_t rest = d - (pos_t{1} << k);
    return ladder_[ladder_pos_[u] - rest];
  }

  LevelAncestorKind kind() const noexcept { return kind_; }
  std::size_t bytes() const noexcept {
    return (jump_.size() + ladder_.size() + ladder_pos_.size()) * sizeof(pos_t);
  }

 private:
  LevelAncestorKind kind_ = LevelAncestorKind::binary_lifting;
  std::size_t nodes_ = 0;
  std::vector<pos_t> jump_;        // row k: 2^k-th ancestor (or the root)
  std::vector<pos_t> ladder_;      // ladders concatenated, top to bottom
  std::vector<pos_t> ladder_pos_;  // index of each node inside its own path's ladder
};

}  // namespace lce
