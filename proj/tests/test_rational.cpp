#include "tscl/rational.hpp"

#include <gtest/gtest.h>

#include "tscl/sampling.hpp"

using tscl::Int;
using tscl::Rational;

TEST(Rational, NormalizesToLowestTerms) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-2, 4), Rational(-1, 2));
  EXPECT_EQ(Rational(1, -2), Rational(-1, 2));  // sign moves to the numerator
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(6, 3).denominator(), Int(1));
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 2) / Rational(3, 2), Rational(1, 3));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
  EXPECT_EQ(tscl::abs(Rational(-5, 3)), Rational(5, 3));
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1, 2) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(Int(1), Int(0)), std::domain_error);
}

TEST(Rational, FloorIsFloorNotTruncation) {
  EXPECT_EQ(tscl::floor_int(Rational(24, 7)), Int(3));
  EXPECT_EQ(tscl::floor_int(Rational(-1, 2)), Int(-1));
  EXPECT_EQ(tscl::floor_int(Rational(5)), Int(5));
  EXPECT_EQ(tscl::floor_int(Rational(-7, 2)), Int(-4));
  EXPECT_EQ(tscl::ceil_int(Rational(-1, 2)), Int(0));
  EXPECT_EQ(tscl::ceil_int(Rational(24, 7)), Int(4));
  EXPECT_EQ(tscl::frac(Rational(-1, 4)), Rational(3, 4));
}

TEST(Rational, Mediant) {
  EXPECT_EQ(tscl::mediant(Rational(0, 1), Rational(1, 1)), Rational(1, 2));
  EXPECT_EQ(tscl::mediant(Rational(1, 2), Rational(1, 1)), Rational(2, 3));
  EXPECT_EQ(tscl::mediant(Rational(1, 3), Rational(1, 2)), Rational(2, 5));
}

TEST(Rational, DyadicPredicates) {
  EXPECT_TRUE(tscl::is_dyadic(Rational(3, 8)));
  EXPECT_FALSE(tscl::is_dyadic(Rational(1, 3)));
  EXPECT_TRUE(tscl::is_dyadic(Rational(5)));
  EXPECT_TRUE(tscl::is_power_of_two(Rational(1, 4)));
  EXPECT_TRUE(tscl::is_power_of_two(Rational(8)));
  EXPECT_TRUE(tscl::is_power_of_two(Rational(1)));
  EXPECT_FALSE(tscl::is_power_of_two(Rational(3, 4)));
  EXPECT_FALSE(tscl::is_power_of_two(Rational(-2)));
  EXPECT_FALSE(tscl::is_power_of_two(Rational(0)));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_GE(Rational(2, 4), Rational(1, 2));
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(tscl::to_string(Rational(1, 2)), "1/2");
  EXPECT_EQ(tscl::to_string(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(tscl::to_string(Rational(7)), "7");
  EXPECT_EQ(tscl::parse_rational("24/7"), Rational(24, 7));
  EXPECT_EQ(tscl::parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(tscl::parse_rational(" 5 "), Rational(5));
  EXPECT_EQ(tscl::parse_rational("4/6"), Rational(2, 3));
}

TEST(Rational, ParseRejectsGarbage) {
  EXPECT_THROW(tscl::parse_rational(""), tscl::ParseError);
  EXPECT_THROW(tscl::parse_rational("1/0"), tscl::ParseError);
  EXPECT_THROW(tscl::parse_rational("1/-2"), tscl::ParseError);
  EXPECT_THROW(tscl::parse_rational("a/b"), tscl::ParseError);
  EXPECT_THROW(tscl::parse_rational("1/2/3"), tscl::ParseError);
  EXPECT_THROW(tscl::parse_rational("1.5"), tscl::ParseError);
}

TEST(Rational, SampledInvariants) {
  tscl::Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = tscl::random_rational(rng);
    Rational b = tscl::random_rational(rng);
    Int f = tscl::floor_int(a);
    EXPECT_LE(Rational(f), a);
    EXPECT_LT(a, Rational(f + 1));
    EXPECT_EQ((a + b) - b, a);
    if (a != b) {
      Rational lo = a < b ? a : b, hi = a < b ? b : a;
      Rational m = tscl::mediant(lo, hi);
      EXPECT_LT(lo, m);
      EXPECT_LT(m, hi);
    }
  }
}

TEST(Rational, BigValuesStayExact) {
  Rational x(Int(1), Int(1) << 200);
  Rational sum(0);
  for (int i = 0; i < 100; ++i) sum = sum + x;
  EXPECT_EQ(sum, Rational(Int(100), Int(1) << 200));
  EXPECT_EQ(sum - Rational(Int(25), Int(1) << 198), Rational(0));
}
