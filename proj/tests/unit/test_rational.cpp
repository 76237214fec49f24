#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "thetagw/combinatorics.hpp"
#include "thetagw/rational.hpp"

using thetagw::BigInt;
using thetagw::Rational;

TEST(Rational, StoresLowestTermsWithPositiveDenominator) {
  const Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, ZeroDenominatorRejected) {
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsOnlyCanonicalShapes) {
  EXPECT_EQ(Rational::parse("-8/3"), Rational(-8, 3));
  EXPECT_EQ(Rational::parse("12"), Rational(12));
  EXPECT_EQ(Rational::parse("4/6"), Rational(2, 3));
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1/-2", "a/2", "1.5", " 1", "1/2/3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, PowersOfTwoAndSigns) {
  EXPECT_EQ(thetagw::pow2(-3), Rational(1, 8));
  EXPECT_EQ(thetagw::pow2(0), Rational(1));
  EXPECT_EQ(Rational(-4).pow(-2), Rational(1, 16));
  EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
  EXPECT_EQ(thetagw::sign_power(7), Rational(-1));
  EXPECT_EQ(thetagw::sign_power(-2), Rational(1));
}

TEST(Rational, NoOverflowOnLargeBinomials) {
  // C(102, 50) exceeds 64 bits by a wide margin.
  const Rational big(thetagw::binomial(102, 50));
  EXPECT_EQ(big.to_string(), "391924069196230135646771623956");
  EXPECT_EQ((big * big) / big, big);
}

TEST(RationalProperty, CanonicalFormIsIdempotentAndReduced) {
  std::mt19937_64 rng(20261014);
  for (int round = 0; round < 2000; ++round) {
    const Rational a = thetagw::oracle::random_rational(rng, 1000);
    const Rational again(a.numerator(), a.denominator());
    EXPECT_EQ(again.numerator(), a.numerator());
    EXPECT_EQ(again.denominator(), a.denominator());
    EXPECT_GT(a.denominator(), 0);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(RationalProperty, FieldOperationsAreExact) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 2000; ++round) {
    const Rational a = thetagw::oracle::random_rational(rng);
    const Rational b = thetagw::oracle::random_rational(rng);
    const Rational c = thetagw::oracle::random_rational(rng);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(-(-a), a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
      EXPECT_EQ(b * b.inverse(), Rational(1));
    }
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  }
}
