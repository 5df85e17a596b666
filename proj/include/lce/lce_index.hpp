#pragma once
// The composed LCE index. A query first extends up to t symbols through the
// navigation tree; past that it aligns both positions onto the t-cover,
// counts whole equal blocks with the block code, and finishes with one more
// short extension: LCE = delta + t*l2 + l3.
//
// With t' < t the short structures are built for t' only. Short extensions
// of length t chain t'-steps, and the final partial block is resolved from a
// table of sorted cover blocks instead.

#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "lce/blockcode.hpp"
#include "lce/navtree.hpp"
#include "lce/packed.hpp"
#include "lce/tst.hpp"

namespace lce {

struct BuildOptions {
  pos_t t_prime = 0;  // 0 means t' = t
  bool packed = false;
  unsigned word_size = 0;  // packed variant; 0 picks min(64, n*b)
  LevelAncestorKind la = LevelAncestorKind::binary_lifting;
  bool compute_z = false;  // run the LZ77 parse for the stats report
};

// Component counts and the word estimate
//   estimated_words = 4*tst_nodes + ceil(tst_ref_len / 8) + 2*nav_nodes
//                     + sampled_count + 3*code_len + prefix_entries
struct SpaceStats {
  std::uint64_t n = 0, t = 0, t_prime = 0;
  std::uint64_t tst_nodes = 0, tst_leaves = 0, tst_ref_len = 0;
  std::uint64_t nav_nodes = 0, sampled_count = 0;
  std::uint64_t code_len = 0, cover_size = 0;
  std::uint64_t prefix_entries = 0;
  std::uint64_t estimated_words = 0;
  std::optional<std::uint64_t> z;

  static std::uint64_t estimate(const SpaceStats& s) {
    return 4 * s.tst_nodes + (s.tst_ref_len + 7) / 8 + 2 * s.nav_nodes + s.sampled_count + 3 * s.code_len +
           s.prefix_entries;
  }
};

// Per-query instrumentation.
struct QueryTrace {
  unsigned short_calls = 0;  // short_lce calls on the t'-structures
  bool main_path = false;    // went through the block code
  pos_t l1 = 0, delta = 0, l2 = 0, l3 = 0;
};

class LceIndex {
 public:
  LceIndex() = default;

  static LceIndex build(const Text& text, pos_t t, const BuildOptions& opts = {});

  pos_t n() const noexcept { return n_; }
  pos_t t() const noexcept { return t_; }
  pos_t t_prime() const noexcept { return t_prime_; }

  pos_t lce(pos_t i, pos_t j, QueryTrace* trace = nullptr) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) out_of_range(i, j);
    if (i == j) return n_ - i + 1;
    return t_prime_ == t_ ? lce_main(i, j, trace) : lce_tradeoff(i, j, trace);
  }

  // min(LCE(i, j), t') with one navigation step.
  pos_t short_lce_prime(pos_t i, pos_t j) const { return nav_.short_lce(tst_, i, j); }
  // min(LCE(i, j), t), chaining t'-steps when t' < t. Requires i != j.
  pos_t short_lce(pos_t i, pos_t j, QueryTrace* trace = nullptr) const {
    if (t_prime_ == t_) {
      if (trace) ++trace->short_calls;
      return nav_.short_lce(tst_, i, j);
    }
    return chained_short(i, j, trace);
  }
  // floor(LCE(i, j) / t) for cover positions, nullopt otherwise.
  std::optional<pos_t> long_lce(pos_t i, pos_t j) const { return bc_.long_lce(i, j); }

  // Symbol LCE through the bit-packed variant; requires a packed build.
  pos_t lce_packed(pos_t i, pos_t j) const;
  bool has_packed() const noexcept { return packed_.has_value(); }
  const PackedIndex& packed() const { return *packed_; }

  const TruncatedSuffixTree& tst() const noexcept { return tst_; }
  const NavTree& nav() const noexcept { return nav_; }
  const BlockCode& block_code() const noexcept { return bc_; }
  const CoverIndex& cover() const noexcept { return bc_.cover(); }
  const BlockPrefixTable& prefix_table() const noexcept { return prefix_; }

  const SpaceStats& stats() const noexcept { return stats_; }
  // Bytes held in memory by the query structures.
  std::size_t index_bytes() const noexcept;

  std::vector<std::uint8_t> serialize() const;
  static LceIndex deserialize(std::span<const std::uint8_t> bytes);
  void save_file(const std::filesystem::path& path) const;
  static LceIndex load_file(const std::filesystem::path& path);

 private:
  [[noreturn]] static void out_of_range(pos_t i, pos_t j);

  pos_t lce_main(pos_t i, pos_t j, QueryTrace* trace) const {
    const pos_t l1 = nav_.short_lce(tst_, i, j);
    if (trace) {
      trace->short_calls = 1;
      trace->l1 = l1;
    }
    if (l1 < t_) return l1;
    const pos_t delta = bc_.cover().cover().h(i, j);
    const pos_t l2 = bc_.long_lce_unchecked(i + delta, j + delta);
    const pos_t l3 = nav_.short_lce(tst_, i + delta + t_ * l2, j + delta + t_ * l2);
    if (trace) {
      trace->short_calls = 2;
      trace->main_path = true;
      trace->delta = delta;
      trace->l2 = l2;
      trace->l3 = l3;
    }
    return delta + t_ * l2 + l3;
  }

  pos_t lce_tradeoff(pos_t i, pos_t j, QueryTrace* trace) const;
  pos_t chained_short(pos_t i, pos_t j, QueryTrace* trace) const;
  std::uint32_t cover_block_rank(pos_t i) const {
    return bc_.cover().block_defined(i) ? bc_.rank_at(i) : prefix_.tail_rank(i, n_);
  }
  void fill_stats();

  pos_t n_ = 0, t_ = 1, t_prime_ = 1;
  TruncatedSuffixTree tst_;
  NavTree nav_;
  BlockCode bc_;
  BlockPrefixTable prefix_;
  std::optional<PackedIndex> packed_;
  SpaceStats stats_;
};

// Block length chosen by comparing measured TST leaf counts with the cover term.
struct TuneProbe {
  pos_t t = 0;
  std::uint64_t tst_leaves = 0;  // leaves of TST(w, min(2t, n))
  std::uint64_t cover_term = 0;  // ceil(n / sqrt(t))
  std::uint64_t total() const noexcept { return tst_leaves + cover_term; }
};

struct TuneResult {
  pos_t t_star = 1;
  std::vector<TuneProbe> probes;  // in probing order
};

// Doubles t while the TST side is smaller than the cover side, then binary
// searches between the last two probes; returns the probed t of least total.
TuneResult tune_tau(const Text& text, unsigned budget = 64);

}  // namespace lce
