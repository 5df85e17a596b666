#include "lce/lz77.hpp"

#include <algorithm>

#include "lce/suffix.hpp"

namespace lce {

LzFactorization lz77_factorize(const Text& text) {
  const auto w = text.codes();
  const std::size_t n = w.size();
  const auto sa = suffix_array(w);
  const auto isa = inverse_permutation(sa);
  const auto lcp = lcp_array(w, std::span<const std::uint32_t>(sa), std::span<const std::uint32_t>(isa));
  const SparseTableMin lcp_rmq(lcp);
  const SparseTableMin sa_rmq(sa);

  // Nearest suffix-array neighbours (left and right) starting earlier in the text.
  std::vector<std::uint32_t> psv(n, kNone), nsv(n, kNone);
  std::vector<std::uint32_t> stack;
  for (std::size_t r = 0; r < n; ++r) {
    while (!stack.empty() && sa[stack.back()] > sa[r]) {
      nsv[stack.back()] = static_cast<std::uint32_t>(r);
      stack.pop_back();
    }
    if (!stack.empty()) psv[r] = stack.back();
    stack.push_back(static_cast<std::uint32_t>(r));
  }

  auto lcp_between = [&](std::size_t a, std::size_t b) -> std::uint32_t {
    if (a > b) std::swap(a, b);
    return lcp_rmq.min(a + 1, b);
  };

  LzFactorization out;
  std::size_t p = 0;
  while (p < n) {
    const std::uint32_t r = isa[p];
    std::uint32_t len = 0;
    if (psv[r] != kNone) len = std::max(len, lcp_between(psv[r], r));
    if (nsv[r] != kNone) len = std::max(len, lcp_between(r, nsv[r]));

    LzFactor f;
    f.start = static_cast<pos_t>(p + 1);
    if (len == 0) {
      f.len = 1;
      f.symbol = w[p];
    } else {
      // Widen [lo, hi] to every suffix sharing the factor, then take its
      // smallest text position.
      std::size_t lo = r, hi = r;
      {
        std::size_t a = 0, b = r;  // smallest lo with min(lcp[lo+1..r]) >= len
        while (a < b) {
          const std::size_t mid = (a + b) / 2;
          if (lcp_rmq.min(mid + 1, r) >= len) b = mid; else a = mid + 1;
        }
        lo = a;
      }
      {
        std::size_t a = r, b = n - 1;  // largest hi with min(lcp[r+1..hi]) >= len
        while (a < b) {
          const std::size_t mid = (a + b + 1) / 2;
          if (lcp_rmq.min(r + 1, mid) >= len) a = mid; else b = mid - 1;
        }
        hi = a;
      }
      f.len = len;
      f.src = sa_rmq.min(lo, hi) + 1;
    }
    out.factors.push_back(f);
    p += f.len;
  }
  return out;
}

}  // namespace lce
