#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "rbsym/checked.hpp"

namespace rbsym {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Numerator and denominator are 128-bit; every operation is overflow-checked,
/// so a result is either exact or an OverflowError is thrown.
class Rational {
 public:
  using value_type = __int128;

  constexpr Rational() = default;
  constexpr Rational(Integer v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(value_type num, value_type den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidArgument("rational with zero denominator");
    normalize();
  }

  [[nodiscard]] value_type numerator() const { return num_; }
  [[nodiscard]] value_type denominator() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_ == 0; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }

  /// Narrows to Integer; throws if the value is not an integer or out of range.
  [[nodiscard]] Integer to_integer() const {
    if (den_ != 1) throw InvalidArgument("rational " + fraction_string() + " is not an integer");
    if (num_ > INT64_MAX || num_ < INT64_MIN) throw OverflowError("rational does not fit a 64-bit integer");
    return static_cast<Integer>(num_);
  }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const {
    return den_ == 1 ? to_string_i128(num_) : fraction_string();
  }
  /// Always "p/q", also for integers.
  [[nodiscard]] std::string fraction_string() const {
    return to_string_i128(num_) + "/" + to_string_i128(den_);
  }

  Rational operator-() const { return from_reduced(checked::sub<value_type>(0, num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return {checked::add(a.num_, b.num_), a.den_};
    const value_type g = gcd(a.den_, b.den_);
    const value_type da = a.den_ / g;
    const value_type db = b.den_ / g;
    return {checked::add(checked::mul(a.num_, db), checked::mul(b.num_, da)), checked::mul(a.den_, db)};
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-reduce first to keep intermediates small.
    const value_type g1 = gcd(a.num_, b.den_);
    const value_type g2 = gcd(b.num_, a.den_);
    const value_type n1 = g1 == 0 ? a.num_ : a.num_ / g1;
    const value_type d2 = g1 == 0 ? b.den_ : b.den_ / g1;
    const value_type n2 = g2 == 0 ? b.num_ : b.num_ / g2;
    const value_type d1 = g2 == 0 ? a.den_ : a.den_ / g2;
    return from_reduced(checked::mul(n1, n2), checked::mul(d1, d2));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const value_type l = checked::mul(a.num_, b.den_);
    const value_type r = checked::mul(b.num_, a.den_);
    return l <=> r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  // std::gcd rejects __int128 unless GNU extensions are enabled.
  static value_type gcd(value_type a, value_type b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const value_type t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_reduced(value_type num, value_type den) {
    Rational r;
    r.num_ = num;
    r.den_ = den;
    r.normalize();
    return r;
  }

  void normalize() {
    if (den_ < 0) {
      num_ = checked::sub<value_type>(0, num_);
      den_ = checked::sub<value_type>(0, den_);
    }
    const value_type g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  value_type num_ = 0;
  value_type den_ = 1;
};

}  // namespace rbsym
