#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace hbstrata {

using Int = std::int64_t;

/// Exact fraction in lowest terms with a positive denominator.
///
/// All slopes and thresholds in the library are Rationals; nothing is ever
/// rounded to floating point.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(Int numerator, Int denominator);

  Int numerator() const { return value_.numerator(); }
  Int denominator() const { return value_.denominator(); }

  bool is_integer() const { return value_.denominator() == 1; }
  Int floor() const;
  Int ceil() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(0) - a; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", or the bare integer when q = 1.
  std::string to_string() const;
  static std::optional<Rational> parse(std::string_view text);

 private:
  explicit Rational(boost::rational<Int> v) : value_(v) {}
  boost::rational<Int> value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hbstrata
