#include <gtest/gtest.h>

#include "dtm/rational.hpp"

using dtm::Rational;

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("0"), Rational());
  EXPECT_EQ(Rational::parse("123456789012345678901234567890").str(), "123456789012345678901234567890");
}

TEST(Rational, NormalizesToLowestTerms) {
  const auto r = Rational::parse("6/8");
  EXPECT_EQ(r.str(), "3/4");
  EXPECT_EQ(r.numerator(), 3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(10, -4).str(), "-5/2");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_TRUE(Rational::parse("4/2").is_integer());
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "abc", "1/", "/2", "1.5", "--1", "1/-2", " 1", "+"}) {
    EXPECT_THROW(Rational::parse(bad), dtm::RationalFormatError) << bad;
  }
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(), std::domain_error);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(1, 5) + Rational(1, 7) - Rational(1, 9) + Rational(1), Rational(388, 315));
  EXPECT_EQ(Rational(2) + Rational(146, 315), Rational(776, 315));
  EXPECT_EQ(Rational(-2, 3).abs(), Rational(2, 3));
  EXPECT_EQ(-Rational(2, 3) * Rational(3, 2), Rational(-1));
}

TEST(Rational, OrdersByCrossMultiplication) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
  EXPECT_GT(Rational(776, 315), Rational(2));
  EXPECT_LT(Rational(776, 315), Rational(8, 3));
  // 10^30 + 1 over 10^30 versus 1: beyond double precision
  const Rational big = Rational::parse("1000000000000000000000000000001/1000000000000000000000000000000");
  EXPECT_GT(big, Rational(1));
  EXPECT_EQ(big.approx(), 1.0);
}

TEST(Rational, SignQueries) {
  EXPECT_EQ(Rational(-3, 7).sign(), -1);
  EXPECT_EQ(Rational().sign(), 0);
  EXPECT_TRUE(Rational().is_zero());
  EXPECT_EQ(Rational(5, 1).str(), "5");
}
