#include "hbstrata/rational.hpp"

#include <charconv>
#include <ostream>

#include "hbstrata/error.hpp"

namespace hbstrata {

Rational::Rational(Int numerator, Int denominator) {
  if (denominator == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  value_.assign(numerator, denominator);
}

Int Rational::floor() const {
  Int n = value_.numerator();
  Int d = value_.denominator();
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Int Rational::ceil() const {
  Int n = value_.numerator();
  Int d = value_.denominator();
  Int q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return q;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_.numerator() == 0) throw Error(ErrorKind::ParseError, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ == b.value_) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::string Rational::to_string() const {
  if (is_integer()) return std::to_string(numerator());
  return std::to_string(numerator()) + "/" + std::to_string(denominator());
}

namespace {

std::optional<Int> parse_int(std::string_view s) {
  Int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::optional<Rational> Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto v = parse_int(text);
    if (!v) return std::nullopt;
    return Rational(*v);
  }
  auto num = parse_int(text.substr(0, slash));
  auto den = parse_int(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hbstrata
