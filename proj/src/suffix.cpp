#include "lce/suffix.hpp"

#include <algorithm>
#include <numeric>

#include "lce/kernels.hpp"

namespace lce {

namespace {

// Stable counting sort of `order` by key(order[k]), keys in [0, key_range).
template <typename Key>
void counting_sort(std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& scratch,
                   std::vector<std::uint32_t>& count, std::size_t key_range, Key key) {
  count.assign(key_range + 1, 0);
  for (auto v : order) ++count[key(v) + 1];
  for (std::size_t k = 1; k <= key_range; ++k) count[k] += count[k - 1];
  scratch.resize(order.size());
  for (auto v : order) scratch[count[key(v)]++] = v;
  order.swap(scratch);
}

}  // namespace

std::vector<std::uint32_t> suffix_array(std::span<const std::uint32_t> s) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  // Initial ranks: dense relabeling of the symbols.
  std::vector<std::uint32_t> rank(n);
  {
    std::vector<std::uint32_t> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      rank[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin());
    }
  }
  std::iota(sa.begin(), sa.end(), 0u);
  std::vector<std::uint32_t> scratch, count, next_rank(n);
  std::size_t classes = *std::max_element(rank.begin(), rank.end()) + 1;
  counting_sort(sa, scratch, count, classes, [&](std::uint32_t i) { return rank[i]; });

  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Second key: rank[i + k] + 1, or 0 past the end. Radix by second key then
    // stable by first key.
    auto second = [&](std::uint32_t i) -> std::uint32_t {
      return i + k < n ? rank[i + k] + 1 : 0;
    };
    counting_sort(sa, scratch, count, classes + 1, second);
    counting_sort(sa, scratch, count, classes, [&](std::uint32_t i) { return rank[i]; });

    next_rank[sa[0]] = 0;
    std::uint32_t c = 0;
    for (std::size_t r = 1; r < n; ++r) {
      const std::uint32_t a = sa[r - 1], b = sa[r];
      if (rank[a] != rank[b] || second(a) != second(b)) ++c;
      next_rank[b] = c;
    }
    rank.swap(next_rank);
    classes = static_cast<std::size_t>(c) + 1;
  }
  return sa;
}

std::vector<std::uint32_t> suffix_array(std::span<const std::uint8_t> s) {
  std::vector<std::uint32_t> wide(s.begin(), s.end());
  return suffix_array(std::span<const std::uint32_t>(wide));
}

std::vector<std::uint32_t> inverse_permutation(std::span<const std::uint32_t> sa) {
  std::vector<std::uint32_t> isa(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) isa[sa[r]] = static_cast<std::uint32_t>(r);
  return isa;
}

SparseTableMin::SparseTableMin(std::span<const std::uint32_t> values) : size_(values.size()) {
  if (size_ == 0) return;
  const unsigned levels = floor_log2(size_) + 1;
  std::size_t total = 0;
  offsets_.resize(levels);
  for (unsigned k = 0; k < levels; ++k) {
    offsets_[k] = total;
    total += size_ - (std::size_t{1} << k) + 1;
  }
  table_.resize(total);
  std::copy(values.begin(), values.end(), table_.begin());
  for (unsigned k = 1; k < levels; ++k) {
    const std::size_t half = std::size_t{1} << (k - 1);
    const std::size_t width = size_ - (std::size_t{1} << k) + 1;
    const std::size_t prev_width = size_ - half + 1;
    kernels::min_shifted(std::span(table_.data() + offsets_[k], width),
                         std::span<const std::uint32_t>(table_.data() + offsets_[k - 1], prev_width), half);
  }
}

}  // namespace lce
