#pragma once
// Ground-truth LCE: the character scan and the classical inverse suffix
// array + LCP + RMQ structure ("ISA+").

#include <vector>

#include "lce/suffix.hpp"
#include "lce/text.hpp"

namespace lce {

// Character-by-character comparison of w[i..n] and w[j..n].
pos_t naive_lce(const Text& text, pos_t i, pos_t j);

class IsaOracle {
 public:
  explicit IsaOracle(const Text& text);

  pos_t n() const noexcept { return static_cast<pos_t>(isa_.size()); }
  pos_t lce(pos_t i, pos_t j) const;

  const std::vector<std::uint32_t>& sa() const noexcept { return sa_; }
  const std::vector<std::uint32_t>& isa() const noexcept { return isa_; }
  const std::vector<std::uint32_t>& lcp() const noexcept { return lcp_; }

  std::size_t bytes() const noexcept {
    return (sa_.size() + isa_.size() + lcp_.size()) * sizeof(std::uint32_t) + rmq_.bytes();
  }

 private:
  std::vector<std::uint32_t> sa_, isa_, lcp_;
  SparseTableMin rmq_;
};

}  // namespace lce
