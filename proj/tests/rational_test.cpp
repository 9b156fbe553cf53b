#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "hbstrata/error.hpp"
#include "hbstrata/hn_type.hpp"
#include "hbstrata/rational.hpp"

using hbstrata::Error;
using hbstrata::ErrorKind;
using hbstrata::Int;
using hbstrata::Rational;

TEST(Rational, SlopeExamples) {
  EXPECT_EQ(hbstrata::slope(3, 0), Rational(0));
  EXPECT_EQ(hbstrata::slope(2, 1), Rational(1, 2));
  EXPECT_EQ(hbstrata::slope(3, 4), Rational(4, 3));
  EXPECT_EQ(hbstrata::slope(3, 4).to_string(), "4/3");
  EXPECT_EQ(hbstrata::slope(3, 0).to_string(), "0");
}

TEST(Rational, ZeroRankRejected) {
  try {
    hbstrata::slope(0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroRank);
  }
}

TEST(Rational, LowestTermsAndSign) {
  Rational r(4, -6);
  EXPECT_EQ(r.numerator(), -2);
  EXPECT_EQ(r.denominator(), 3);
  EXPECT_EQ(Rational(0, -5).denominator(), 1);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(-1, 2).floor(), -1);
  EXPECT_EQ(Rational(-1, 2).ceil(), 0);
  EXPECT_EQ(Rational(7, 3).floor(), 2);
  EXPECT_EQ(Rational(7, 3).ceil(), 3);
  EXPECT_EQ(Rational(-6, 3).floor(), -2);
  EXPECT_EQ(Rational(-6, 3).ceil(), -2);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-2/4"), Rational(-1, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_FALSE(Rational::parse("1/0"));
  EXPECT_FALSE(Rational::parse("x"));
  EXPECT_FALSE(Rational::parse("1/2/3"));
}

// Arithmetic agrees with cross-multiplied integer formulas, results are in
// lowest terms, and ordering is transitive.
TEST(Rational, RandomArithmeticProperties) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<Int> num(-60, 60);
  std::uniform_int_distribution<Int> den(1, 12);
  auto lowest = [](const Rational& r) {
    return r.denominator() > 0 && std::gcd(r.numerator() < 0 ? -r.numerator() : r.numerator(), r.denominator()) == 1;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    Int a = num(rng), b = den(rng), c = num(rng), d = den(rng), e = num(rng), f = den(rng);
    Rational x(a, b), y(c, d), z(e, f);
    Rational sum = x + y, diff = x - y, prod = x * y;
    ASSERT_TRUE(lowest(sum) && lowest(diff) && lowest(prod));
    ASSERT_EQ(sum.numerator() * b * d, (a * d + c * b) * sum.denominator());
    ASSERT_EQ(diff.numerator() * b * d, (a * d - c * b) * diff.denominator());
    ASSERT_EQ(prod.numerator() * b * d, a * c * prod.denominator());
    ASSERT_EQ(x < y, a * d < c * b);
    if (x < y && y < z) ASSERT_LT(x, z);
    if (x <= y && y <= z) ASSERT_LE(x, z);
    ASSERT_EQ(Rational::parse(x.to_string()), x);
  }
}
