#include "lce/text.hpp"

#include <algorithm>

namespace lce {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::empty_input: return "empty input";
    case ErrorCode::sentinel_collision: return "sentinel collision";
    case ErrorCode::alphabet_overflow: return "alphabet overflow";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::param_out_of_range: return "parameter out of range";
    case ErrorCode::io_error: return "i/o error";
    case ErrorCode::format_error: return "format error";
  }
  return "unknown error";
}

Text Text::load(std::string_view raw, Sentinel sentinel) {
  return load(std::span(reinterpret_cast<const std::uint8_t*>(raw.data()), raw.size()), sentinel);
}

Text Text::load(std::span<const std::uint8_t> raw, Sentinel sentinel) {
  if (raw.empty()) throw LceError(ErrorCode::empty_input, "input is empty");
  if (raw.size() >= kNone - 1) throw LceError(ErrorCode::param_out_of_range, "input too long");

  std::array<bool, 256> present{};
  for (auto c : raw) present[c] = true;

  Text text;
  text.codes_.reserve(raw.size() + 1);
  if (sentinel.policy == Sentinel::Policy::explicit_symbol) {
    if (present[sentinel.symbol]) {
      throw LceError(ErrorCode::sentinel_collision, "sentinel symbol occurs in the input");
    }
    text.auto_ = false;
    text.sentinel_ = sentinel.symbol;
    for (unsigned c = 0; c < 256; ++c) text.decode_[c] = static_cast<std::uint8_t>(c);
    text.codes_.assign(raw.begin(), raw.end());
    text.sigma_ = static_cast<unsigned>(std::count(present.begin(), present.end(), true)) + 1;
  } else {
    std::array<std::uint8_t, 256> encode{};
    unsigned next = 1;
    for (unsigned c = 0; c < 256; ++c) {
      if (!present[c]) continue;
      if (next > 255) throw LceError(ErrorCode::alphabet_overflow, "all 256 byte values occur; no room for a sentinel");
      encode[c] = static_cast<std::uint8_t>(next);
      text.decode_[next] = static_cast<std::uint8_t>(c);
      ++next;
    }
    text.auto_ = true;
    text.sentinel_ = 0;
    text.decode_[0] = 0;
    for (auto c : raw) text.codes_.push_back(encode[c]);
    text.sigma_ = next;
  }
  text.codes_.push_back(text.sentinel_);
  return text;
}

std::uint8_t Text::at(pos_t i) const {
  if (i < 1 || i > n()) throw LceError(ErrorCode::out_of_range, "position out of range");
  return codes_[i - 1];
}

std::vector<std::uint8_t> Text::substring(pos_t i, pos_t j) const {
  if (i < 1 || i > j || j > n()) throw LceError(ErrorCode::out_of_range, "substring bounds out of range");
  std::vector<std::uint8_t> out;
  out.reserve(j - i + 1);
  for (pos_t k = i; k <= j; ++k) out.push_back(decode_[codes_[k - 1]]);
  return out;
}

}  // namespace lce
