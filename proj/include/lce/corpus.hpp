#pragma once
// Deterministic test and benchmark strings (no sentinel).

#include <cstdint>
#include <string>
#include <vector>

namespace lce::corpus {

// Prefix of the infinite Fibonacci word over {a, b}.
std::string fibonacci(std::size_t n);
// Prefix of the Thue-Morse sequence over {a, b}.
std::string thue_morse(std::size_t n);
// Uniform symbols from the first sigma letters of a fixed 64-letter alphabet.
std::string random_text(std::size_t n, unsigned sigma, std::uint64_t seed);
// Every string over {a, b} of length 1..max_len.
std::vector<std::string> all_binary(unsigned max_len);

}  // namespace lce::corpus
