#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "hydromom/errors.hpp"

namespace hydromom {

/// Exact integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  // Implicit on purpose: integer exponents and orders read naturally at call sites.
  constexpr HalfInt(int value) : twice_(2 * value) {}  // NOLINT(google-explicit-constructor)

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return twice_ / 2.0; }

  /// Integer value; throws DomainError for half-integers.
  int as_int() const {
    if (!is_integer()) throw DomainError("HalfInt " + to_string() + " is not an integer");
    return twice_ / 2;
  }

  /// Largest integer not above the value.
  constexpr int floor() const { return twice_ >= 0 ? twice_ / 2 : -((1 - twice_) / 2); }

  std::string to_string() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  friend std::ostream& operator<<(std::ostream& os, HalfInt h) { return os << h.to_string(); }

 private:
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace hydromom
