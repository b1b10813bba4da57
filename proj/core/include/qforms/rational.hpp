#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qforms/checked.hpp"

namespace qf {

// Exact rational on 128-bit integers, always normalized (den > 0, gcd = 1).
// Overflow throws instead of wrapping; 128 bits is ample for the patch
// geometry this type exists for.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 num, i64 den) : num_(num), den_(den) { normalize(); }
  static Rational from128(i128 num, i128 den) { return Rational(num, den, 0); }

  i128 num() const { return num_; }
  i128 den() const { return den_; }

  Rational operator-() const { return Rational(checked_sub128(0, num_), den_, 0); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(checked_add128(checked_mul128(a.num_, b.den_),
                                   checked_mul128(b.num_, a.den_)),
                    checked_mul128(a.den_, b.den_), 0);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(checked_mul128(a.num_, b.num_),
                    checked_mul128(a.den_, b.den_), 0);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw invalid_input_error("rational division by zero");
    return Rational(checked_mul128(a.num_, b.den_),
                    checked_mul128(a.den_, b.num_), 0);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked_mul128(a.num_, b.den_) < checked_mul128(b.num_, a.den_);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  double to_double() const {
    return static_cast<double>(static_cast<long double>(num_) /
                               static_cast<long double>(den_));
  }

  std::string str() const;

  // Accepts "p" or "p/q" with optional leading '-'.
  static std::optional<Rational> parse(std::string_view text);

 private:
  Rational(i128 num, i128 den, int) : num_(num), den_(den) { normalize(); }

  static i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize() {
    if (den_ == 0) throw invalid_input_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    i128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  i128 num_;
  i128 den_;
};

}  // namespace qf
