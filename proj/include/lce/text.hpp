#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lce/common.hpp"

namespace lce {

// How the terminal symbol is chosen when a raw byte string is loaded.
struct Sentinel {
  enum class Policy { automatic, explicit_symbol };

  Policy policy = Policy::automatic;
  std::uint8_t symbol = 0;

  static Sentinel automatic() { return {}; }
  static Sentinel explicit_symbol(std::uint8_t s) { return {Policy::explicit_symbol, s}; }
};

// An input string terminated by a unique sentinel.
//
// Under the automatic policy the present bytes are remapped order-preservingly
// onto codes 1..k and code 0 is the sentinel, so the sentinel sorts first.
// Under the explicit policy codes equal the raw bytes and the chosen sentinel
// byte is appended. Positions are 1-based; position n() holds the sentinel.
class Text {
 public:
  static Text load(std::span<const std::uint8_t> raw, Sentinel sentinel = Sentinel::automatic());
  static Text load(std::string_view raw, Sentinel sentinel = Sentinel::automatic());

  pos_t n() const noexcept { return static_cast<pos_t>(codes_.size()); }
  // Distinct symbols present, sentinel included.
  unsigned sigma() const noexcept { return sigma_; }
  std::uint8_t sentinel_code() const noexcept { return sentinel_; }
  bool auto_sentinel() const noexcept { return auto_; }

  // Code at 1-based position i.
  std::uint8_t at(pos_t i) const;
  std::span<const std::uint8_t> codes() const noexcept { return codes_; }

  // Original bytes of w[i..j]. The automatic sentinel decodes to byte 0.
  std::vector<std::uint8_t> substring(pos_t i, pos_t j) const;
  std::uint8_t decode(std::uint8_t code) const noexcept { return decode_[code]; }

 private:
  std::vector<std::uint8_t> codes_;
  std::array<std::uint8_t, 256> decode_{};
  unsigned sigma_ = 0;
  std::uint8_t sentinel_ = 0;
  bool auto_ = true;
};

}  // namespace lce
