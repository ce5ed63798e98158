#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace shadow {

/// Exact element of (1/2)Z, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt(2 * n); }

  constexpr std::int64_t twice_value() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// 1 when the value is an odd multiple of 1/2.
  constexpr int parity() const { return static_cast<int>(twice_ & 1); }

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) { twice_ += o.twice_; return *this; }
  constexpr HalfInt& operator-=(HalfInt o) { twice_ -= o.twice_; return *this; }
  constexpr auto operator<=>(const HalfInt&) const = default;

  /// Literal form: `-3`, `0`, `7`, or `p/2` with odd p.
  std::string str() const;
  static std::optional<HalfInt> parse(std::string_view text);

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace shadow
