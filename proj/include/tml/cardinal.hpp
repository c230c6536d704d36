#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "tml/error.hpp"

namespace tml {

using Natural = std::uint64_t;

/// Number of aleph levels available (aleph_0 .. aleph_{K-1}) unless a caller asks otherwise.
inline constexpr std::size_t kDefaultMaxLevel = 8;

namespace detail {

inline Natural checked_add(Natural a, Natural b) {
  Natural r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("natural addition overflow");
  return r;
}

inline Natural checked_mul(Natural a, Natural b) {
  Natural r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("natural multiplication overflow");
  return r;
}

inline std::optional<Natural> parse_natural(std::string_view text) {
  if (text.empty() || text.size() > 20) return std::nullopt;
  Natural value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') return std::nullopt;
    if (__builtin_mul_overflow(value, Natural{10}, &value) ||
        __builtin_add_overflow(value, Natural(ch - '0'), &value))
      return std::nullopt;
  }
  return value;
}

}  // namespace detail

/// A finite natural or a regular infinite cardinal aleph_k with finite k.
class Cardinal {
 public:
  constexpr Cardinal() = default;

  static constexpr Cardinal finite(Natural value) { return Cardinal(false, value); }

  static Cardinal aleph(std::size_t index, std::size_t max_level = kDefaultMaxLevel) {
    if (index >= max_level)
      throw LevelError("aleph_" + std::to_string(index) + " exceeds the maximum level " +
                       std::to_string(max_level));
    return Cardinal(true, index);
  }

  constexpr bool is_finite() const noexcept { return !infinite_; }
  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_zero() const noexcept { return !infinite_ && value_ == 0; }

  /// Finite value; meaningless for alephs.
  constexpr Natural value() const noexcept { return infinite_ ? 0 : value_; }
  /// Aleph index; meaningless for finite cardinals.
  constexpr std::size_t index() const noexcept { return infinite_ ? static_cast<std::size_t>(value_) : 0; }

  constexpr bool is_aleph(std::size_t index) const noexcept { return infinite_ && value_ == index; }

  friend constexpr bool operator==(const Cardinal&, const Cardinal&) = default;
  friend constexpr std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.infinite_ != b.infinite_) return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  /// Cardinal addition: finite sums stay finite, otherwise the larger operand wins.
  friend Cardinal operator+(const Cardinal& a, const Cardinal& b) {
    if (a.is_finite() && b.is_finite()) return finite(detail::checked_add(a.value_, b.value_));
    return a < b ? b : a;
  }

  /// Cardinal multiplication: zero annihilates, otherwise the max rule for infinite operands.
  friend Cardinal operator*(const Cardinal& a, const Cardinal& b) {
    if (a.is_zero() || b.is_zero()) return finite(0);
    if (a.is_finite() && b.is_finite()) return finite(detail::checked_mul(a.value_, b.value_));
    return a < b ? b : a;
  }

  Cardinal& operator+=(const Cardinal& other) { return *this = *this + other; }

 private:
  constexpr Cardinal(bool infinite, Natural value) : infinite_(infinite), value_(value) {}

  bool infinite_ = false;
  Natural value_ = 0;
};

inline std::string to_string(const Cardinal& c) {
  return c.is_finite() ? std::to_string(c.value()) : "aleph_" + std::to_string(c.index());
}

inline std::ostream& operator<<(std::ostream& os, const Cardinal& c) { return os << to_string(c); }

/// Accepts a decimal natural or `aleph_<k>`.
inline Cardinal parse_cardinal(std::string_view text, std::size_t max_level = kDefaultMaxLevel) {
  constexpr std::string_view prefix = "aleph_";
  if (text.starts_with(prefix)) {
    auto index = detail::parse_natural(text.substr(prefix.size()));
    if (!index) throw ParseError("malformed aleph index in '" + std::string(text) + "'", prefix.size());
    if (*index >= max_level)
      throw LevelError("aleph_" + std::to_string(*index) + " exceeds the maximum level " +
                       std::to_string(max_level));
    return Cardinal::aleph(static_cast<std::size_t>(*index), max_level);
  }
  auto value = detail::parse_natural(text);
  if (!value) throw ParseError("malformed cardinal '" + std::string(text) + "'", 0);
  return Cardinal::finite(*value);
}

}  // namespace tml
