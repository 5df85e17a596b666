#include "lce/diffcover.hpp"

#include <algorithm>
#include <cmath>

namespace lce {

DifferenceCover DifferenceCover::build(pos_t t) {
  if (t < 1) throw LceError(ErrorCode::param_out_of_range, "difference cover modulus must be >= 1");
  pos_t r = static_cast<pos_t>(std::ceil(std::sqrt(static_cast<double>(t))));
  while (static_cast<std::uint64_t>(r) * r < t) ++r;
  while (r > 1 && static_cast<std::uint64_t>(r - 1) * (r - 1) >= t) --r;
  std::vector<pos_t> members;
  for (pos_t x = 0; x < r && x < t; ++x) members.push_back(x);
  const pos_t steps = (t + r - 1) / r;
  for (pos_t k = 1; k <= steps; ++k) members.push_back(static_cast<pos_t>((static_cast<std::uint64_t>(k) * r) % t));
  return DifferenceCover(t, std::move(members));
}

DifferenceCover DifferenceCover::from_members(pos_t t, std::vector<pos_t> members) {
  if (t < 1) throw LceError(ErrorCode::param_out_of_range, "difference cover modulus must be >= 1");
  for (auto x : members) {
    if (x >= t) throw LceError(ErrorCode::param_out_of_range, "difference cover member >= t");
  }
  return DifferenceCover(t, std::move(members));
}

DifferenceCover::DifferenceCover(pos_t t, std::vector<pos_t> members) : t_(t), div_(t), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  index_of_.assign(t_, kNone);
  for (pos_t k = 0; k < members_.size(); ++k) index_of_[members_[k]] = k;
  hdelta_.assign(t_, kNone);
  for (pos_t d = 0; d < t_; ++d) {
    for (auto x : members_) {
      if (index_of_[(x + d) % t_] != kNone) {
        hdelta_[d] = x;
        break;
      }
    }
    if (hdelta_[d] == kNone) throw LceError(ErrorCode::param_out_of_range, "member set is not a difference cover");
  }
}

CoverIndex::CoverIndex(DifferenceCover dc, pos_t n) : dc_(std::move(dc)), n_(n) {
  const pos_t t = dc_.t();
  seg_of_residue_.assign(t, kNone);
  seg_index_.assign(t, kNone);
  std::size_t offset = 0;
  for (auto x : dc_.members()) {
    const pos_t first = first_position(x);
    if (first <= n_) cover_size_ += (n_ - first) / t + 1;
    if (first + t - 1 > n_) continue;
    const pos_t blocks = (n_ - (first + t - 1)) / t + 1;
    seg_index_[x] = static_cast<pos_t>(segments_.size());
    seg_of_residue_[x] = static_cast<pos_t>(offset);
    segments_.push_back({x, static_cast<pos_t>(offset), blocks});
    offset += blocks + 1;
  }
  code_length_ = offset;
}

}  // namespace lce
