#include "nsz/errors.hpp"
#include "nsz/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using nsz::Rational;

TEST(Rational, DecimalRoundsHalfAwayFromZero) {
  EXPECT_EQ(nsz::to_decimal(nsz::make_rational(1, 8), 2), "0.13");
  EXPECT_EQ(nsz::to_decimal(nsz::make_rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(nsz::to_decimal(nsz::make_rational(18750, 89), 3), "210.674");
  EXPECT_EQ(nsz::to_decimal(nsz::make_rational(-1, 1000), 2), "0.00");
  EXPECT_EQ(nsz::to_decimal(Rational(7), 0), "7");
}

TEST(Rational, RepeatingDecimal) {
  EXPECT_EQ(nsz::repeating_decimal(nsz::make_rational(2737, 66)), "41.4(69)");
  EXPECT_EQ(nsz::repeating_decimal(nsz::make_rational(1175, 4)), "293.75");
  EXPECT_EQ(nsz::repeating_decimal(nsz::make_rational(-1, 3)), "-0.(3)");
  EXPECT_EQ(nsz::repeating_decimal(Rational(11)), "11");
}

TEST(Rational, ParseAcceptsCanonicalForms) {
  EXPECT_EQ(nsz::parse_rational("6/4"), nsz::make_rational(3, 2));
  EXPECT_EQ(nsz::parse_rational("-5"), Rational(-5));
  EXPECT_EQ(nsz::parse_rational("+5"), Rational(5));
  EXPECT_THROW(nsz::parse_rational("1/0"), nsz::FormatError);
  EXPECT_THROW(nsz::parse_rational("1/-2"), nsz::FormatError);
  EXPECT_THROW(nsz::parse_rational("0.5"), nsz::FormatError);
  EXPECT_THROW(nsz::parse_rational(""), nsz::FormatError);
}

TEST(Rational, FractionRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  for (int i = 0; i < 500; ++i) {
    Rational r = nsz::make_rational(num(rng), den(rng));
    EXPECT_EQ(nsz::parse_rational(nsz::to_fraction(r)), r);
  }
}

TEST(Rational, Int128RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    nsz::Integer v = nsz::Integer(static_cast<long>(rng() >> 2)) * nsz::Integer(static_cast<long>(rng() >> 2));
    if (i % 2 == 1) v = -v;
    EXPECT_EQ(nsz::from_int128(nsz::to_int128(v)), v);
  }
  EXPECT_THROW(nsz::to_int128(nsz::power(nsz::Integer(2), 127)), nsz::ParameterError);
}

TEST(Rational, FactorialAndPower) {
  EXPECT_EQ(nsz::factorial(6), 720);
  EXPECT_EQ(nsz::power(nsz::Integer(5), 5), 3125);
  EXPECT_EQ(nsz::power(nsz::make_rational(2, 3), 3), nsz::make_rational(8, 27));
  EXPECT_EQ(nsz::isqrt(nsz::Integer(99)), 9);
}
