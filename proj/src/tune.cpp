#include <algorithm>
#include <cmath>

#include "lce/kernels.hpp"
#include "lce/lce_index.hpp"

namespace lce {

namespace {

std::uint64_t cover_term(pos_t n, pos_t t) {
  return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) / std::sqrt(static_cast<double>(t))));
}

}  // namespace

TuneResult tune_tau(const Text& text, unsigned budget) {
  const pos_t n = text.n();
  TuneResult result;
  if (n == 0) return result;
  budget = std::max(budget, 1u);

  // Leaves of TST(w, q) = number of q-clipped suffix groups = #{r : lcp[r] < q}
  // (lcp[0] = 0 opens the first group).
  const auto sa = suffix_array(text.codes());
  const auto isa = inverse_permutation(sa);
  const auto lcp = lcp_array(text.codes(), std::span<const std::uint32_t>(sa), std::span<const std::uint32_t>(isa));

  auto probe = [&](pos_t t) -> const TuneProbe& {
    for (const auto& p : result.probes) {
      if (p.t == t) return p;
    }
    const pos_t q = static_cast<pos_t>(std::min<std::uint64_t>(2ull * t, n));
    result.probes.push_back({t, kernels::count_below(lcp, q), cover_term(n, t)});
    return result.probes.back();
  };
  auto tst_smaller = [](const TuneProbe& p) { return p.tst_leaves < p.cover_term; };

  pos_t lo = 1, hi = 1;
  bool crossed = !tst_smaller(probe(1));
  while (!crossed && hi < n && result.probes.size() < budget) {
    lo = hi;
    hi = static_cast<pos_t>(std::min<std::uint64_t>(2ull * hi, n));
    crossed = !tst_smaller(probe(hi));
  }
  if (crossed) {
    while (hi - lo > 1 && result.probes.size() < budget) {
      const pos_t mid = lo + (hi - lo) / 2;
      if (tst_smaller(probe(mid))) lo = mid;
      else hi = mid;
    }
  }
  const auto best = std::min_element(result.probes.begin(), result.probes.end(), [](const auto& a, const auto& b) {
    return a.total() < b.total() || (a.total() == b.total() && a.t < b.t);
  });
  result.t_star = best->t;
  return result;
}

}  // namespace lce
