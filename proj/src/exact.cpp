#include "wszeged/exact.hpp"

#include <numeric>

namespace wsz {

std::string AffineCost::to_string() const {
  std::string out;
  if (slope != 0) {
    if (slope == 1) out = "n";
    else if (slope == -1) out = "-n";
    else out = std::to_string(slope) + "n";
  }
  if (intercept != 0 || out.empty()) {
    if (!out.empty() && intercept > 0) out += "+";
    out += std::to_string(intercept);
  }
  return out;
}

Rational::Rational(Int num, Int den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const Int g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Int Rational::floor() const noexcept {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Int Rational::ceil() const noexcept {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int compare_at(const AffineCost& line, const Rational& x, const AffineCost& other) {
  // (s1 - s2) * p / q + (b1 - b2), scaled by q > 0.
  const __int128 ds = static_cast<__int128>(line.slope) - other.slope;
  const __int128 db = static_cast<__int128>(line.intercept) - other.intercept;
  const __int128 v = ds * x.num() + db * x.den();
  return (v > 0) - (v < 0);
}

Rational intersection(const AffineCost& a, const AffineCost& b) {
  if (a.slope == b.slope) throw DomainError("parallel lines have no intersection");
  return Rational(checked_sub(b.intercept, a.intercept), checked_sub(a.slope, b.slope));
}

} // namespace wsz
