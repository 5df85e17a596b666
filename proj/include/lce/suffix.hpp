#pragma once
// Suffix array machinery shared by the oracle, the LZ77 parser, the truncated
// suffix tree builder and the block code. All arrays here are 0-based.

#include <cstdint>
#include <span>
#include <vector>

namespace lce {

// Prefix-doubling (Manber-Myers with radix passes) suffix array over an
// integer string. A suffix that is a proper prefix of another sorts first, so
// no terminator is required.
std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> s);
std::vector<std::uint32_t> suffix_array(std::span<const std::uint8_t> s);

std::vector<std::uint32_t> inverse_permutation(std::span<const std::uint32_t> sa);

// Kasai et al.: lcp[r] = LCP(s[sa[r-1]..], s[sa[r]..]), lcp[0] = 0.
template <typename Symbol>
std::vector<std::uint32_t> lcp_array(std::span<const Symbol> s, std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> isa) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> lcp(n, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t r = isa[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[r - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

// Range-minimum over a fixed array of 32-bit values: O(n log n) words,
// O(1) query. Stores values, not argmins.
class SparseTableMin {
 public:
  SparseTableMin() = default;
  explicit SparseTableMin(std::span<const std::uint32_t> values);

  // Minimum of values[lo..hi], inclusive; requires lo <= hi < size().
  std::uint32_t min(std::size_t lo, std::size_t hi) const {
    const unsigned k = floor_log2(hi - lo + 1);
    const std::uint32_t* row = table_.data() + offsets_[k];
    const std::uint32_t a = row[lo];
    const std::uint32_t b = row[hi + 1 - (std::size_t{1} << k)];
    return a < b ? a : b;
  }

  std::size_t size() const noexcept { return size_; }
  std::uint32_t at(std::size_t k) const { return table_[k]; }
  std::size_t bytes() const noexcept {
    return table_.size() * sizeof(std::uint32_t) + offsets_.size() * sizeof(std::size_t);
  }

 private:
  static unsigned floor_log2(std::size_t x) noexcept {
    return static_cast<unsigned>(63 - __builtin_clzll(static_cast<unsigned long long>(x)));
  }

  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_;  // rows concatenated; row k holds minima of width 2^k
  std::vector<std::size_t> offsets_;
};

}  // namespace lce
