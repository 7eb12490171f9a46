// half_int.hpp — exact half-integer arithmetic (values stored doubled).
// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qsph {

// Exact element of (1/2)Z. The doubled value is the canonical storage, so
// spin labels like l = 3/2 are represented without rounding.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(long whole) : twice_(2 * whole) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(long t) {
    HalfInt h;
    h.twice_ = t;
    return h;
  }

  constexpr long twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  long as_integer() const;  // throws when not an integer

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) {
    return from_twice(x.twice_ + y.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) {
    return from_twice(x.twice_ - y.twice_);
  }
  friend constexpr HalfInt operator*(long k, HalfInt x) {
    return from_twice(k * x.twice_);
  }
  constexpr HalfInt abs() const { return from_twice(twice_ < 0 ? -twice_ : twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  constexpr double to_double() const { return static_cast<double>(twice_) / 2.0; }

  // "2", "-1/2", "3/2"
  std::string str() const;
  static HalfInt parse(const std::string& text);  // accepts the same forms

private:
  long twice_ = 0;
};

inline constexpr HalfInt half_of(long twice) { return HalfInt::from_twice(twice); }

}  // namespace qsph
