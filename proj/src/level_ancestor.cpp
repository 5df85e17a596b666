#include "lce/level_ancestor.hpp"

#include <algorithm>

namespace lce {

LevelAncestor::LevelAncestor(std::span<const pos_t> parent, std::span<const pos_t> depth, pos_t max_distance,
                             LevelAncestorKind kind)
    : kind_(kind), nodes_(parent.size()) {
  const pos_t n = static_cast<pos_t>(nodes_);
  unsigned levels = 0;
  while (max_distance > 1 && (pos_t{1} << levels) < max_distance) ++levels;
  if (levels == 0) levels = 1;

  jump_.resize(levels * nodes_);
  for (pos_t v = 0; v < n; ++v) jump_[v] = parent[v] == kNone ? v : parent[v];
  for (unsigned k = 1; k < levels; ++k) {
    const pos_t* prev = jump_.data() + (k - 1) * nodes_;
    pos_t* row = jump_.data() + k * nodes_;
    for (pos_t v = 0; v < n; ++v) row[v] = prev[prev[v]];
  }
  if (kind_ == LevelAncestorKind::binary_lifting) return;

  // Long-path decomposition: each node continues into its tallest child.
  std::vector<pos_t> order(n);
  for (pos_t v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](pos_t a, pos_t b) { return depth[a] > depth[b]; });
  std::vector<pos_t> height(n, 0), tall_child(n, kNone);
  for (auto v : order) {
    const pos_t p = parent[v];
    if (p == kNone) continue;
    if (tall_child[p] == kNone || height[v] + 1 > height[p]) {
      height[p] = std::max(height[p], height[v] + 1);
      tall_child[p] = v;
    }
  }
  // Paths start at nodes that are not their parent's tall child. Each ladder
  // holds up to |path| ancestors above the path top, then the path itself.
  ladder_pos_.assign(n, 0);
  for (pos_t top = 0; top < n; ++top) {
    const pos_t p = parent[top];
    if (p != kNone && tall_child[p] == top) continue;
    const pos_t path_len = height[top] + 1;
    std::vector<pos_t> above;
    for (pos_t u = p; u != kNone && above.size() < path_len; u = parent[u]) above.push_back(u);
    ladder_.insert(ladder_.end(), above.rbegin(), above.rend());
    pos_t idx = static_cast<pos_t>(ladder_.size());
    for (pos_t v = top; v != kNone; v = tall_child[v]) {
      ladder_pos_[v] = idx++;
      ladder_.push_back(v);
    }
  }
}

}  // namespace lce
