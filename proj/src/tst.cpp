#include "lce/tst.hpp"

#include <algorithm>

namespace lce {

pos_t TruncatedSuffixTree::add_node(pos_t parent, pos_t depth) {
  const auto id = static_cast<pos_t>(parent_.size());
  parent_.push_back(parent);
  depth_.push_back(depth);
  ref_start_.push_back(0);
  ref_len_.push_back(0);
  return id;
}

TruncatedSuffixTree TruncatedSuffixTree::build(const Text& text, pos_t q, std::vector<pos_t>* leaf_of_position) {
  const auto w = text.codes();
  const pos_t n = text.n();
  if (q < 1 || q > n) throw LceError(ErrorCode::param_out_of_range, "truncation depth must be in [1, n]");

  const auto sa = suffix_array(w);
  const auto isa = inverse_permutation(sa);
  const auto lcp = lcp_array(w, std::span<const std::uint32_t>(sa), std::span<const std::uint32_t>(isa));

  TruncatedSuffixTree tree;
  tree.q_ = q;
  tree.add_node(kNone, 0);

  // Suffixes agreeing on q symbols form one leaf; rows of a group are contiguous.
  std::vector<pos_t> group_of_row(n);
  std::vector<pos_t> rep;  // representative (leftmost) text position per node
  rep.push_back(0);
  std::vector<pos_t> stack{kRoot};
  pos_t groups = 0;
  for (pos_t r = 0; r < n;) {
    pos_t end = r + 1;
    pos_t locc = sa[r];
    while (end < n && lcp[end] >= q) {
      locc = std::min<pos_t>(locc, sa[end]);
      ++end;
    }
    const pos_t h = r == 0 ? 0 : lcp[r];  // < q by construction
    const pos_t leaf_depth = std::min<pos_t>(q, n - sa[r]);

    pos_t last = kNone;
    while (tree.depth_[stack.back()] > h) {
      last = stack.back();
      stack.pop_back();
    }
    if (tree.depth_[stack.back()] < h) {
      const pos_t x = tree.add_node(stack.back(), h);
      rep.push_back(rep[last]);
      tree.parent_[last] = x;
      stack.push_back(x);
    }
    const pos_t leaf = tree.add_node(stack.back(), leaf_depth);
    rep.push_back(locc);
    stack.push_back(leaf);
    tree.leaves_.push_back(leaf);
    tree.leaf_locc_.push_back(locc);
    for (pos_t k = r; k < end; ++k) group_of_row[k] = groups;
    ++groups;
    r = end;
  }

  for (pos_t v = 1; v < tree.parent_.size(); ++v) {
    const pos_t up = tree.depth_[tree.parent_[v]];
    tree.ref_start_[v] = rep[v] + up;
    tree.ref_len_[v] = tree.depth_[v] - up;
  }
  tree.refstr_.assign(w.begin(), w.end());
  tree.rebuild_derived();

  if (leaf_of_position != nullptr) {
    leaf_of_position->resize(n);
    for (pos_t p = 0; p < n; ++p) (*leaf_of_position)[p] = group_of_row[isa[p]];
  }
  return tree;
}

void TruncatedSuffixTree::rebuild_derived() {
  const auto nodes = static_cast<pos_t>(parent_.size());

  leaf_rank_of_node_.assign(nodes, kNone);
  for (pos_t r = 0; r < leaves_.size(); ++r) leaf_rank_of_node_[leaves_[r]] = r;

  // Children in lexicographic order: a node is first reached through its
  // leftmost leaf, and leaves are visited in rank order.
  std::vector<pos_t> count(nodes + 1, 0);
  for (pos_t v = 1; v < nodes; ++v) ++count[parent_[v] + 1];
  child_begin_.assign(nodes + 1, 0);
  for (pos_t v = 0; v < nodes; ++v) child_begin_[v + 1] = child_begin_[v] + count[v + 1];
  child_list_.assign(nodes > 0 ? nodes - 1 : 0, 0);
  std::vector<pos_t> fill(child_begin_.begin(), child_begin_.end() - 1);
  std::vector<bool> seen(nodes, false);
  seen[kRoot] = true;
  for (auto leaf : leaves_) {
    std::vector<pos_t> path;
    for (pos_t v = leaf; !seen[v]; v = parent_[v]) {
      seen[v] = true;
      path.push_back(v);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) child_list_[fill[parent_[*it]]++] = *it;
  }

  // Euler tour over string depths; the minimum between two leaves' first
  // visits is the string depth of their LCA.
  std::vector<std::uint32_t> tour;
  tour.reserve(2 * static_cast<std::size_t>(nodes));
  euler_first_.assign(leaves_.size(), 0);
  std::vector<std::pair<pos_t, pos_t>> dfs{{kRoot, 0}};
  tour.push_back(depth_[kRoot]);
  while (!dfs.empty()) {
    auto& [v, next] = dfs.back();
    const auto kids = children(v);
    if (next < kids.size()) {
      const pos_t c = kids[next++];
      if (leaf_rank_of_node_[c] != kNone) euler_first_[leaf_rank_of_node_[c]] = static_cast<std::uint32_t>(tour.size());
      tour.push_back(depth_[c]);
      dfs.emplace_back(c, 0);
    } else {
      dfs.pop_back();
      if (!dfs.empty()) tour.push_back(depth_[dfs.back().first]);
    }
  }
  euler_rmq_ = SparseTableMin(tour);
}

void TruncatedSuffixTree::compact_reference() {
  if (compacted_) return;
  struct Interval {
    pos_t start, end;  // half-open, text positions
  };
  std::vector<Interval> intervals;
  intervals.reserve(leaves_.size());
  for (pos_t r = 0; r < leaves_.size(); ++r) {
    intervals.push_back({leaf_locc_[r], leaf_locc_[r] + depth_[leaves_[r]]});
  }
  std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.start < b.start; });

  struct Piece {
    pos_t start, end, offset;
  };
  std::vector<Piece> pieces;
  for (const auto& iv : intervals) {
    if (!pieces.empty() && iv.start < pieces.back().end) {
      pieces.back().end = std::max(pieces.back().end, iv.end);
    } else {
      pieces.push_back({iv.start, iv.end, 0});
    }
  }
  std::vector<std::uint8_t> ref;
  for (auto& p : pieces) {
    p.offset = static_cast<pos_t>(ref.size());
    ref.insert(ref.end(), refstr_.begin() + p.start, refstr_.begin() + p.end);
  }
  for (pos_t v = 1; v < parent_.size(); ++v) {
    const pos_t s = ref_start_[v];
    auto it = std::upper_bound(pieces.begin(), pieces.end(), s, [](pos_t x, const Piece& p) { return x < p.start; });
    --it;
    ref_start_[v] = it->offset + (s - it->start);
  }
  refstr_ = std::move(ref);
  refstr_.shrink_to_fit();
  leaf_locc_.clear();
  leaf_locc_.shrink_to_fit();
  compacted_ = true;
}

const std::vector<pos_t>& TruncatedSuffixTree::mark_tgram_nodes(pos_t t) {
  if (t < 1 || t > q_) throw LceError(ErrorCode::param_out_of_range, "t-gram length must be in [1, q]");
  const auto original = static_cast<pos_t>(parent_.size());
  for (pos_t v = 1; v < original; ++v) {
    const pos_t p = parent_[v];
    if (depth_[p] < t && t < depth_[v]) {
      const pos_t u = add_node(p, t);
      const pos_t cut = t - depth_[p];
      ref_start_[u] = ref_start_[v];
      ref_len_[u] = cut;
      ref_start_[v] += cut;
      ref_len_[v] -= cut;
      parent_[v] = u;
    }
  }
  rebuild_derived();

  tgram_len_ = t;
  tgram_count_ = 0;
  tgram_rank_.assign(leaves_.size(), 0);
  std::vector<std::pair<pos_t, pos_t>> dfs{{kRoot, 0}};  // node, rank of depth-t ancestor
  while (!dfs.empty()) {
    auto [v, rank] = dfs.back();
    dfs.pop_back();
    if (depth_[v] == t) rank = static_cast<pos_t>(++tgram_count_);
    if (leaf_rank_of_node_[v] != kNone) tgram_rank_[leaf_rank_of_node_[v]] = rank;
    const auto kids = children(v);
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) dfs.emplace_back(*it, rank);
  }
  return tgram_rank_;
}

std::vector<std::uint8_t> TruncatedSuffixTree::decode(pos_t node) const {
  std::vector<std::uint8_t> out;
  out.reserve(depth_[node]);
  std::vector<pos_t> path;
  for (pos_t v = node; v != kRoot; v = parent_[v]) path.push_back(v);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const auto l = label(*it);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::optional<pos_t> TruncatedSuffixTree::find_leaf(std::span<const std::uint8_t> pattern) const {
  pos_t v = kRoot;
  std::size_t matched = 0;
  while (matched < pattern.size()) {
    const auto kids = children(v);
    const std::uint8_t want = pattern[matched];
    auto it = std::lower_bound(kids.begin(), kids.end(), want,
                               [&](pos_t c, std::uint8_t sym) { return refstr_[ref_start_[c]] < sym; });
    if (it == kids.end() || refstr_[ref_start_[*it]] != want) return std::nullopt;
    const auto l = label(*it);
    if (l.size() > pattern.size() - matched) return std::nullopt;
    if (!std::equal(l.begin(), l.end(), pattern.begin() + static_cast<std::ptrdiff_t>(matched))) return std::nullopt;
    matched += l.size();
    v = *it;
  }
  if (leaf_rank_of_node_[v] == kNone) return std::nullopt;
  return leaf_rank_of_node_[v];
}

std::size_t TruncatedSuffixTree::bytes() const noexcept {
  const std::size_t words = parent_.size() * 4 + leaves_.size() + child_begin_.size() + child_list_.size() +
                            leaf_rank_of_node_.size() + euler_first_.size() + leaf_locc_.size();
  return words * sizeof(pos_t) + refstr_.size() + euler_rmq_.bytes();
}

void TruncatedSuffixTree::save(BinaryWriter& out) const {
  out.put<std::uint32_t>(q_);
  out.put<std::uint8_t>(compacted_ ? 1 : 0);
  out.put<std::uint32_t>(tgram_len_);
  out.put<std::uint64_t>(tgram_count_);
  out.put_vector(parent_);
  out.put_vector(depth_);
  out.put_vector(ref_start_);
  out.put_vector(ref_len_);
  out.put_vector(leaves_);
  out.put_vector(refstr_);
  out.put_vector(leaf_locc_);
}

TruncatedSuffixTree TruncatedSuffixTree::load(BinaryReader& in) {
  TruncatedSuffixTree tree;
  tree.q_ = in.get<std::uint32_t>();
  tree.compacted_ = in.get<std::uint8_t>() != 0;
  tree.tgram_len_ = in.get<std::uint32_t>();
  tree.tgram_count_ = static_cast<std::size_t>(in.get<std::uint64_t>());
  tree.parent_ = in.get_vector<pos_t>();
  tree.depth_ = in.get_vector<pos_t>();
  tree.ref_start_ = in.get_vector<pos_t>();
  tree.ref_len_ = in.get_vector<pos_t>();
  tree.leaves_ = in.get_vector<pos_t>();
  tree.refstr_ = in.get_vector<std::uint8_t>();
  tree.leaf_locc_ = in.get_vector<pos_t>();

  const std::size_t nodes = tree.parent_.size();
  if (nodes == 0 || tree.depth_.size() != nodes || tree.ref_start_.size() != nodes || tree.ref_len_.size() != nodes) {
    BinaryReader::fail("tree arrays disagree in length");
  }
  for (std::size_t v = 1; v < nodes; ++v) {
    if (tree.parent_[v] >= nodes || static_cast<std::uint64_t>(tree.ref_start_[v]) + tree.ref_len_[v] > tree.refstr_.size()) {
      BinaryReader::fail("tree node out of bounds");
    }
  }
  for (auto leaf : tree.leaves_) {
    if (leaf >= nodes) BinaryReader::fail("leaf id out of bounds");
  }
  tree.rebuild_derived();
  return tree;
}

}  // namespace lce
