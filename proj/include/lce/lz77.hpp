#pragma once

#include <vector>

#include "lce/text.hpp"

namespace lce {

// One factor of the self-referential LZ77 parse. A literal has src == 0.
struct LzFactor {
  pos_t start = 0;  // 1-based text position of the factor
  pos_t len = 0;
  pos_t src = 0;    // 1-based leftmost earlier occurrence (copies only)
  std::uint8_t symbol = 0;  // code of the literal symbol

  bool literal() const noexcept { return src == 0; }
};

struct LzFactorization {
  // All factors, the trailing sentinel literal included.
  std::vector<LzFactor> factors;

  // Factor count without the sentinel literal.
  std::size_t z() const noexcept { return factors.empty() ? 0 : factors.size() - 1; }
  std::size_t z_with_sentinel() const noexcept { return factors.size(); }
};

// Greedy left-to-right parse: each factor is the longest prefix of the
// remaining suffix with an earlier occurrence (overlap allowed), or a literal.
// Suffix array + longest-previous-factor, O(n log n).
LzFactorization lz77_factorize(const Text& text);

}  // namespace lce
