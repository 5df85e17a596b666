#include "lce/navtree.hpp"

namespace lce {

NavTree NavTree::build(std::span<const pos_t> leaf_of_position, const TruncatedSuffixTree& tree, pos_t t,
                       LevelAncestorKind la) {
  const auto n = static_cast<pos_t>(leaf_of_position.size());
  if (t < 1 || t > n) throw LceError(ErrorCode::param_out_of_range, "block length must be in [1, n]");
  if (tree.q() != std::min<pos_t>(2 * t, n)) {
    throw LceError(ErrorCode::param_out_of_range, "navigation tree needs TST(w, min(2t, n))");
  }
  NavTree nav;
  nav.t_ = t;
  nav.div_ = FastDiv(t);
  nav.n_ = n;
  const auto nodes = static_cast<pos_t>(tree.leaf_count());
  nav.parent_.assign(nodes, kNone);
  nav.depth_.assign(nodes, kNone);

  nav.root_ = leaf_of_position[n - 1];
  nav.depth_[nav.root_] = 0;
  for (pos_t p = n - 1; p-- > 0;) {
    const pos_t u = leaf_of_position[p];
    if (nav.depth_[u] != kNone) continue;
    const pos_t v = leaf_of_position[p + 1];
    nav.parent_[u] = v;
    nav.depth_[u] = nav.depth_[v] + 1;
  }

  const pos_t samples = (n + t - 1) / t;
  nav.sampled_.resize(samples);
  for (pos_t k = 0; k < samples; ++k) nav.sampled_[k] = leaf_of_position[k * t];
  nav.la_ = LevelAncestor(nav.parent_, nav.depth_, t, la);
  return nav;
}

void NavTree::set_la_kind(LevelAncestorKind kind) {
  if (kind == la_.kind()) return;
  la_ = LevelAncestor(parent_, depth_, t_, kind);
}

void NavTree::save(BinaryWriter& out) const {
  out.put<std::uint32_t>(t_);
  out.put<std::uint32_t>(n_);
  out.put<std::uint32_t>(root_);
  out.put_vector(parent_);
  out.put_vector(depth_);
  out.put_vector(sampled_);
}

NavTree NavTree::load(BinaryReader& in, LevelAncestorKind la) {
  NavTree nav;
  nav.t_ = in.get<std::uint32_t>();
  nav.n_ = in.get<std::uint32_t>();
  nav.root_ = in.get<std::uint32_t>();
  nav.parent_ = in.get_vector<pos_t>();
  nav.depth_ = in.get_vector<pos_t>();
  nav.sampled_ = in.get_vector<pos_t>();
  const auto nodes = nav.parent_.size();
  if (nav.t_ < 1 || nav.depth_.size() != nodes || nav.root_ >= nodes) BinaryReader::fail("navigation tree header");
  nav.div_ = FastDiv(nav.t_);
  if (nav.sampled_.size() != (static_cast<std::size_t>(nav.n_) + nav.t_ - 1) / nav.t_) {
    BinaryReader::fail("sampled pointer count");
  }
  for (std::size_t v = 0; v < nodes; ++v) {
    if (v != nav.root_ && nav.parent_[v] >= nodes) BinaryReader::fail("navigation parent out of bounds");
  }
  // Depths must step by one along parent links, which also rules out cycles.
  if (nav.depth_[nav.root_] != 0) BinaryReader::fail("navigation root depth");
  for (std::size_t v = 0; v < nodes; ++v) {
    if (v != nav.root_ && nav.depth_[v] != nav.depth_[nav.parent_[v]] + 1) BinaryReader::fail("navigation depth");
  }
  for (auto s : nav.sampled_) {
    if (s >= nodes) BinaryReader::fail("sampled pointer out of bounds");
  }
  nav.la_ = LevelAncestor(nav.parent_, nav.depth_, nav.t_, la);
  return nav;
}

}  // namespace lce
