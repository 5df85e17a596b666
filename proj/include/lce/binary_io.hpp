#pragma once
// Fixed-width little-endian encoding for the index container.

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "lce/common.hpp"

namespace lce {

class BinaryWriter {
 public:
  template <typename T>
    requires std::is_integral_v<T>
  void put(T value) {
    using U = std::make_unsigned_t<T>;
    auto u = static_cast<U>(value);
    for (std::size_t k = 0; k < sizeof(T); ++k) {
      bytes_.push_back(static_cast<std::uint8_t>(u & 0xFF));
      if constexpr (sizeof(T) > 1) u = static_cast<U>(u >> 8);
    }
  }

  template <typename T>
    requires std::is_integral_v<T>
  void put_vector(std::span<const T> values) {
    put<std::uint64_t>(values.size());
    if constexpr (std::endian::native == std::endian::little) {
      const auto* raw = reinterpret_cast<const std::uint8_t*>(values.data());
      bytes_.insert(bytes_.end(), raw, raw + values.size_bytes());
    } else {
      for (auto v : values) put(v);
    }
  }
  template <typename T>
  void put_vector(const std::vector<T>& values) { put_vector(std::span<const T>(values)); }

  void put_raw(std::span<const std::uint8_t> raw) { bytes_.insert(bytes_.end(), raw.begin(), raw.end()); }

  std::size_t size() const noexcept { return bytes_.size(); }
  std::vector<std::uint8_t>& bytes() noexcept { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class BinaryReader {
 public:
  explicit BinaryReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  template <typename T>
    requires std::is_integral_v<T>
  T get() {
    need(sizeof(T));
    using U = std::make_unsigned_t<T>;
    U u = 0;
    for (std::size_t k = 0; k < sizeof(T); ++k) u |= static_cast<U>(static_cast<U>(bytes_[pos_ + k]) << (8 * k));
    pos_ += sizeof(T);
    return static_cast<T>(u);
  }

  template <typename T>
    requires std::is_integral_v<T>
  std::vector<T> get_vector() {
    const auto count = get<std::uint64_t>();
    if (count > (bytes_.size() - pos_) / sizeof(T)) fail("vector length exceeds section");
    std::vector<T> out(static_cast<std::size_t>(count));
    if constexpr (std::endian::native == std::endian::little) {
      if (!out.empty()) std::memcpy(out.data(), bytes_.data() + pos_, out.size() * sizeof(T));
      pos_ += out.size() * sizeof(T);
    } else {
      for (auto& v : out) v = get<T>();
    }
    return out;
  }

  std::span<const std::uint8_t> get_raw(std::size_t len) {
    need(len);
    auto out = bytes_.subspan(pos_, len);
    pos_ += len;
    return out;
  }

  bool done() const noexcept { return pos_ == bytes_.size(); }
  std::size_t remaining() const noexcept { return bytes_.size() - pos_; }

  [[noreturn]] static void fail(const std::string& why) {
    throw LceError(ErrorCode::format_error, "malformed index: " + why);
  }

 private:
  void need(std::size_t len) const {
    if (len > bytes_.size() - pos_) fail("unexpected end of data");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace lce
