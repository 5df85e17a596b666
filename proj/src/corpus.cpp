#include "lce/corpus.hpp"

#include <random>
#include <stdexcept>

namespace lce::corpus {

namespace {
constexpr char kLetters[] = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";
}

std::string fibonacci(std::size_t n) {
  std::string a = "a", b = "ab";
  while (b.size() < n) {
    std::string next = b + a;
    a = std::move(b);
    b = std::move(next);
  }
  return b.substr(0, n);
}

std::string thue_morse(std::size_t n) {
  std::string s(n, 'a');
  for (std::size_t k = 0; k < n; ++k) {
    if (__builtin_popcountll(k) & 1) s[k] = 'b';
  }
  return s;
}

std::string random_text(std::size_t n, unsigned sigma, std::uint64_t seed) {
  if (sigma < 1 || sigma > 64) throw std::invalid_argument("sigma must be in [1, 64]");
  std::mt19937_64 rng(seed);
  std::string s(n, 'a');
  for (auto& c : s) c = kLetters[rng() % sigma];
  return s;
}

std::vector<std::string> all_binary(unsigned max_len) {
  std::vector<std::string> out;
  for (unsigned len = 1; len <= max_len; ++len) {
    for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
      std::string s(len, 'a');
      for (unsigned k = 0; k < len; ++k) {
        if ((bits >> (len - 1 - k)) & 1u) s[k] = 'b';
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace lce::corpus
