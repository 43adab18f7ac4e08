#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "wszeged/error.hpp"

namespace wsz {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// cost = slope * n + intercept, as a function of the total tree order n.
struct AffineCost {
  Int slope = 0;
  Int intercept = 0;

  Int at(Int n) const { return checked_add(checked_mul(slope, n), intercept); }

  AffineCost operator+(const AffineCost& o) const {
    return {checked_add(slope, o.slope), checked_add(intercept, o.intercept)};
  }
  AffineCost operator-(const AffineCost& o) const {
    return {checked_sub(slope, o.slope), checked_sub(intercept, o.intercept)};
  }
  AffineCost scaled(Int f) const { return {checked_mul(slope, f), checked_mul(intercept, f)}; }

  friend bool operator==(const AffineCost&, const AffineCost&) = default;

  // "17n-37" style rendering.
  std::string to_string() const;
};

// Exact rational number with a positive denominator, always in lowest terms.
class Rational {
public:
  Rational() = default;
  Rational(Int value) : num_(value), den_(1) {} // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  Int floor() const noexcept;
  Int ceil() const noexcept;
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  std::string to_string() const;

private:
  Int num_ = 0;
  Int den_ = 1;
};

// Sign of line(x) - value where x is rational; exact.
int compare_at(const AffineCost& line, const Rational& x, const AffineCost& other);

// The abscissa where two non-parallel lines meet.
Rational intersection(const AffineCost& a, const AffineCost& b);

} // namespace wsz
