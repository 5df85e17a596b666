#include "lce/lce_index.hpp"

#include <algorithm>

#include "lce/lz77.hpp"

namespace lce {

void LceIndex::out_of_range(pos_t i, pos_t j) {
  throw LceError(ErrorCode::out_of_range, "query (" + std::to_string(i) + ", " + std::to_string(j) + ") outside [1, n]");
}

LceIndex LceIndex::build(const Text& text, pos_t t, const BuildOptions& opts) {
  const pos_t n = text.n();
  const pos_t tp = opts.t_prime == 0 ? t : opts.t_prime;
  if (t < 1 || t > n) {
    throw LceError(ErrorCode::param_out_of_range, "t = " + std::to_string(t) + " outside [1, " + std::to_string(n) + "]");
  }
  if (tp < 1 || tp > t) throw LceError(ErrorCode::param_out_of_range, "t' must be in [1, t]");

  LceIndex ix;
  ix.n_ = n;
  ix.t_ = t;
  ix.t_prime_ = tp;

  std::vector<pos_t> leaf_of;
  ix.tst_ = TruncatedSuffixTree::build(text, std::min<pos_t>(2 * tp, n), &leaf_of);
  ix.tst_.compact_reference();
  ix.nav_ = NavTree::build(leaf_of, ix.tst_, tp, opts.la);

  CoverIndex cover(DifferenceCover::build(t), n);
  if (tp == t) {
    const auto& ranks = ix.tst_.mark_tgram_nodes(t);
    ix.bc_ = BlockCode::build(std::move(cover), [&](pos_t i) { return ranks[leaf_of[i - 1]]; });
  } else {
    // Sort the clipped t-blocks of all cover positions, comparing through
    // chained t'-steps and the first mismatching symbol.
    std::vector<pos_t> order;
    order.reserve(cover.cover_size());
    for (pos_t i = 1; i <= n; ++i) {
      if (cover.in_cover(i)) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](pos_t a, pos_t b) {
      if (a == b) return false;
      const pos_t l = ix.chained_short(a, b, nullptr);
      return l < t && text.at(a + l) < text.at(b + l);
    });
    std::vector<std::uint32_t> rank_of(n + 1, 0);
    std::vector<std::uint32_t> adjacent;
    std::uint32_t rank = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const pos_t l = k == 0 ? 0 : ix.chained_short(order[k - 1], order[k], nullptr);
      if (k == 0 || l < t) {
        if (k > 0) adjacent.push_back(l);
        ++rank;
      }
      rank_of[order[k]] = rank;
    }
    std::vector<std::uint32_t> tails;
    for (pos_t i = n - t + 2; i <= n; ++i) tails.push_back(rank_of[i]);
    ix.bc_ = BlockCode::build(std::move(cover), [&](pos_t i) { return rank_of[i]; });
    ix.prefix_ = BlockPrefixTable(t, std::move(adjacent), std::move(tails));
  }

  if (opts.packed) ix.packed_ = PackedIndex::build(text, opts.word_size);
  ix.fill_stats();
  if (opts.compute_z) ix.stats_.z = lz77_factorize(text).z();
  return ix;
}

pos_t LceIndex::chained_short(pos_t i, pos_t j, QueryTrace* trace) const {
  pos_t l = 0;
  for (;;) {
    const pos_t s = nav_.short_lce(tst_, i + l, j + l);
    if (trace) ++trace->short_calls;
    l += s;
    if (s < t_prime_ || l >= t_) break;
  }
  return std::min(l, t_);
}

pos_t LceIndex::lce_tradeoff(pos_t i, pos_t j, QueryTrace* trace) const {
  if (trace) trace->short_calls = 0;
  const pos_t l1 = chained_short(i, j, trace);
  if (trace) trace->l1 = l1;
  if (l1 < t_) return l1;
  const pos_t delta = bc_.cover().cover().h(i, j);
  const pos_t l2 = bc_.long_lce_unchecked(i + delta, j + delta);
  const pos_t a = i + delta + t_ * l2, b = j + delta + t_ * l2;
  const pos_t l3 = prefix_.lcp(cover_block_rank(a), cover_block_rank(b));
  if (trace) {
    trace->main_path = true;
    trace->delta = delta;
    trace->l2 = l2;
    trace->l3 = l3;
  }
  return delta + t_ * l2 + l3;
}

pos_t LceIndex::lce_packed(pos_t i, pos_t j) const {
  if (!packed_) throw LceError(ErrorCode::param_out_of_range, "index was built without the packed variant");
  return packed_->lce(i, j);
}

void LceIndex::fill_stats() {
  const auto z = stats_.z;
  stats_ = SpaceStats{};
  stats_.z = z;
  stats_.n = n_;
  stats_.t = t_;
  stats_.t_prime = t_prime_;
  stats_.tst_nodes = tst_.node_count();
  stats_.tst_leaves = tst_.leaf_count();
  stats_.tst_ref_len = tst_.refstr().size();
  stats_.nav_nodes = nav_.node_count();
  stats_.sampled_count = nav_.sampled().size();
  stats_.code_len = bc_.code().size();
  stats_.cover_size = bc_.cover().cover_size();
  stats_.prefix_entries = prefix_.entries();
  stats_.estimated_words = SpaceStats::estimate(stats_);
}

std::size_t LceIndex::index_bytes() const noexcept {
  std::size_t total = sizeof(*this) + tst_.bytes() + nav_.bytes() + bc_.bytes() + prefix_.bytes();
  if (packed_) total += packed_->bytes();
  return total;
}

}  // namespace lce
