#include "lce/oracle.hpp"

#include "lce/kernels.hpp"

namespace lce {

pos_t naive_lce(const Text& text, pos_t i, pos_t j) {
  const pos_t n = text.n();
  if (i < 1 || j < 1 || i > n || j > n) throw LceError(ErrorCode::out_of_range, "query position out of range");
  const auto w = text.codes();
  return static_cast<pos_t>(kernels::mismatch(w.subspan(i - 1), w.subspan(j - 1)));
}

IsaOracle::IsaOracle(const Text& text)
    : sa_(suffix_array(text.codes())),
      isa_(inverse_permutation(sa_)),
      lcp_(lcp_array(text.codes(), sa_, isa_)),
      rmq_(lcp_) {}

pos_t IsaOracle::lce(pos_t i, pos_t j) const {
  const pos_t n = this->n();
  if (i < 1 || j < 1 || i > n || j > n) throw LceError(ErrorCode::out_of_range, "query position out of range");
  if (i == j) return n - i + 1;
  std::uint32_t a = isa_[i - 1], b = isa_[j - 1];
  if (a > b) std::swap(a, b);
  return rmq_.min(a + 1, b);
}

}  // namespace lce
