#pragma once
// Brute-force references for the tests. They work on plain std::string with
// the sentinel spelled as '\0' and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lce/corpus.hpp"
#include "lce/text.hpp"

namespace testing {

// Raw string plus the automatic sentinel, matching Text::load ordering.
inline std::string with_sentinel(const std::string& s) { return s + std::string(1, '\0'); }

// 1-based character scan.
inline std::uint32_t scan_lce(const std::string& w, std::uint32_t i, std::uint32_t j) {
  std::uint32_t l = 0;
  while (i - 1 + l < w.size() && j - 1 + l < w.size() && w[i - 1 + l] == w[j - 1 + l]) ++l;
  return l;
}

inline std::string clipped(const std::string& w, std::size_t i, std::size_t q) { return w.substr(i - 1, q); }

// Distinct q-clipped suffixes, in byte order (the automatic sentinel '\0' sorts first).
inline std::set<std::string> clipped_set(const std::string& w, std::size_t q) {
  std::set<std::string> out;
  for (std::size_t i = 1; i <= w.size(); ++i) out.insert(clipped(w, i, q));
  return out;
}

struct BruteFactor {
  std::size_t start, len, src;  // src = 0 for literals
};

// Quadratic greedy LZ77 with self-reference: longest previous factor,
// leftmost source among the longest.
inline std::vector<BruteFactor> brute_lz77(const std::string& w) {
  std::vector<BruteFactor> out;
  std::size_t p = 0;
  while (p < w.size()) {
    std::size_t best = 0, src = 0;
    for (std::size_t s = 0; s < p; ++s) {
      std::size_t l = 0;
      while (p + l < w.size() && w[s + l] == w[p + l]) ++l;
      if (l > best) {
        best = l;
        src = s + 1;
      }
    }
    if (best == 0) {
      out.push_back({p + 1, 1, 0});
      p += 1;
    } else {
      out.push_back({p + 1, best, src});
      p += best;
    }
  }
  return out;
}

// The string suite of small inputs shared by many tests.
inline std::vector<std::string> small_suite(unsigned binary_len = 8, unsigned randoms = 6) {
  std::vector<std::string> out = lce::corpus::all_binary(binary_len);
  out.emplace_back("baabbaabbaaabbaabba");
  out.emplace_back("abababcabababcabababcd");
  out.push_back(lce::corpus::fibonacci(89));
  out.push_back(lce::corpus::thue_morse(100));
  out.emplace_back("aaaaaaaaaaaaaaaaaaaa");
  for (unsigned k = 0; k < randoms; ++k) {
    out.push_back(lce::corpus::random_text(60 + 10 * k, k % 2 == 0 ? 2u : 4u, 1000 + k));
  }
  return out;
}

inline std::vector<std::uint32_t> t_values(std::uint32_t n) {
  std::vector<std::uint32_t> ts = {1, 2, 3, 5, 8};
  std::uint32_t r = 1;
  while ((r + 1) * (r + 1) <= n) ++r;
  ts.push_back(r);
  std::vector<std::uint32_t> out;
  for (auto t : ts) {
    if (t <= n && std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  return out;
}

}  // namespace testing
