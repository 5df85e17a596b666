#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "lce/diffcover.hpp"

using lce::CoverIndex;
using lce::DifferenceCover;
using lce::pos_t;

TEST_CASE("built covers are difference covers of bounded size") {
  for (pos_t t = 1; t <= 300; ++t) {
    const auto dc = DifferenceCover::build(t);
    const auto& d = dc.members();
    const auto r = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(t))));
    CHECK(d.size() <= 2 * r + 1);
    std::vector<bool> covered(t, false);
    for (auto x : d) {
      for (auto y : d) covered[(y + t - x) % t] = true;
    }
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    for (pos_t k = 0; k < t; ++k) {
      // hdelta[k] is the smallest member x with x + k also a member.
      pos_t want = lce::kNone;
      for (auto x : d) {
        if (std::binary_search(d.begin(), d.end(), (x + k) % t)) {
          want = x;
          break;
        }
      }
      REQUIRE(dc.hdelta(k) == want);
    }
  }
}

TEST_CASE("h aligns any pair onto the cover") {
  for (pos_t t : {1u, 2u, 3u, 5u, 8u, 13u, 64u}) {
    const auto dc = DifferenceCover::build(t);
    for (pos_t i = 1; i <= 3 * t + 5; ++i) {
      for (pos_t j = 1; j <= 3 * t + 5; ++j) {
        const pos_t delta = dc.h(i, j);
        CHECK(delta < t);
        CHECK(dc.contains((i + delta) % t));
        CHECK(dc.contains((j + delta) % t));
      }
    }
  }
}

TEST_CASE("explicit cover {1,2,4} modulo 5") {
  const auto dc = DifferenceCover::from_members(5, {1, 2, 4});
  CoverIndex cover(dc, 19);
  std::vector<pos_t> s;
  for (pos_t i = 1; i <= 19; ++i) {
    if (cover.in_cover(i)) s.push_back(i);
  }
  CHECK(s == std::vector<pos_t>{1, 2, 4, 6, 7, 9, 11, 12, 14, 16, 17, 19});
  const pos_t delta = dc.h(3, 12);
  CHECK(delta <= 5);
  CHECK(cover.in_cover(3 + delta));
  CHECK(cover.in_cover(12 + delta));
  CHECK(delta == 4);
  CHECK_THROWS_AS(DifferenceCover::from_members(5, {1, 2}), lce::LceError);
  CHECK_THROWS_AS(DifferenceCover::from_members(5, {1, 7}), lce::LceError);
}

TEST_CASE("code layout is a bijection onto non-separator slots") {
  for (pos_t t : {1u, 2u, 3u, 5u, 8u}) {
    for (pos_t n : {1u, 2u, 7u, 20u, 41u}) {
      CoverIndex cover(DifferenceCover::build(t), n);
      std::set<pos_t> slots;
      std::size_t defined = 0, in_cover = 0;
      for (pos_t i = 1; i <= n; ++i) {
        if (!cover.in_cover(i)) continue;
        ++in_cover;
        if (!cover.block_defined(i)) continue;
        ++defined;
        const auto* seg = cover.segment_of(i);
        REQUIRE(seg != nullptr);
        CHECK(seg->residue == i % t);
        const pos_t k = cover.code_index(i);
        CHECK(k >= seg->offset);
        CHECK(k < seg->offset + seg->blocks);
        CHECK(slots.insert(k).second);
      }
      CHECK(cover.cover_size() == in_cover);
      CHECK(cover.code_length() == defined + cover.segments().size());
      for (const auto& seg : cover.segments()) CHECK(slots.count(seg.offset + seg.blocks) == 0);
      // Consecutive blocks of a residue occupy consecutive slots.
      for (pos_t i = 1; i + t <= n; ++i) {
        if (cover.in_cover(i) && cover.block_defined(i + t)) CHECK(cover.code_index(i + t) == cover.code_index(i) + 1);
      }
    }
  }
}

TEST_CASE("t = 1 covers every position") {
  CoverIndex cover(DifferenceCover::build(1), 10);
  CHECK(cover.cover_size() == 10);
  CHECK(cover.code_length() == 11);
}
