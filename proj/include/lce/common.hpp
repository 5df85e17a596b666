#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lce {

// Text positions. Every public API takes 1-based positions; storage is 0-based.
using pos_t = std::uint32_t;

inline constexpr pos_t kNone = static_cast<pos_t>(-1);

enum class ErrorCode {
  empty_input,
  sentinel_collision,
  alphabet_overflow,
  out_of_range,
  param_out_of_range,
  io_error,
  format_error,
};

const char* to_string(ErrorCode code) noexcept;

class LceError : public std::runtime_error {
 public:
  LceError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lce
