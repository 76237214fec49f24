#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "thetagw/series.hpp"

using thetagw::Rational;
using thetagw::TruncatedSeries;
using thetagw::WLaurent;
using thetagw::ZMonomial;

namespace {

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < order; ++i) coeffs.push_back(thetagw::oracle::random_rational(rng, 9));
  return TruncatedSeries(coeffs, order);
}

TruncatedSeries z_power(std::size_t e, std::size_t order) { return TruncatedSeries::monomial(Rational(1), e, order); }

}  // namespace

TEST(TruncatedSeries, OnePlusZTimesOneMinusZ) {
  const TruncatedSeries a({Rational(1), Rational(1)}, 3);
  const TruncatedSeries b({Rational(1), Rational(-1)}, 3);
  EXPECT_EQ(thetagw::series_mul(a, b), TruncatedSeries({Rational(1), Rational(0), Rational(-1)}, 3));
}

TEST(TruncatedSeries, OrderAdditivityAtTheEdge) {
  for (std::size_t k = 0; k <= 10; ++k) {
    const TruncatedSeries p = z_power(k, 2 * k + 1) * z_power(k, 2 * k + 1);
    ASSERT_TRUE(p.z_order().has_value());
    EXPECT_EQ(*p.z_order(), 2 * k);
    // one order lower and the product is invisible
    if (k > 0) EXPECT_TRUE((z_power(k, 2 * k) * z_power(k, 2 * k)).is_zero());
  }
}

TEST(TruncatedSeries, ObstructionTermLeadingCoefficient) {
  for (int k = 1; k <= 6; ++k) {
    const std::size_t order = 2 * k + 2;
    const TruncatedSeries bk = TruncatedSeries::monomial(Rational(-4).pow(-k), k, order);
    const TruncatedSeries term = z_power(1, order) * bk * bk;
    ASSERT_EQ(term.z_order(), std::optional<std::size_t>(2 * k + 1));
    EXPECT_EQ(term.coeff(2 * k + 1), Rational(4).pow(-2 * k));
  }
}

TEST(TruncatedSeries, MixedOrdersTakeTheMinimum) {
  std::mt19937_64 rng(3);
  const TruncatedSeries a = random_series(rng, 5);
  const TruncatedSeries b = random_series(rng, 8);
  EXPECT_EQ((a + b).order(), 5u);
  EXPECT_EQ((a * b).order(), 5u);
  EXPECT_EQ((b - a).order(), 5u);
  EXPECT_EQ(a * b, a * b.truncated(5));
  EXPECT_THROW(a.truncated(6), std::invalid_argument);
  EXPECT_THROW(TruncatedSeries(0), std::invalid_argument);
}

TEST(TruncatedSeries, ZOrderSentinelAndRendering) {
  const TruncatedSeries zero(4);
  EXPECT_FALSE(zero.z_order().has_value());
  EXPECT_EQ(zero.to_string(), "O(z^4)");
  const TruncatedSeries s({Rational(1), Rational(0), Rational(-1, 8)}, 3);
  EXPECT_EQ(s.to_string(), "1 + -1/8*z^2 + O(z^3)");
  EXPECT_EQ(TruncatedSeries({Rational(0), Rational(3)}, 2).to_string(), "3*z + O(z^2)");
}

TEST(TruncatedSeriesProperty, RingAxioms) {
  std::mt19937_64 rng(11);
  for (std::size_t order = 1; order <= 32; ++order) {
    for (int round = 0; round < 3; ++round) {
      const auto a = random_series(rng, order);
      const auto b = random_series(rng, order);
      const auto c = random_series(rng, order);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a + (-a), TruncatedSeries(order));
      EXPECT_EQ(a * TruncatedSeries::constant(Rational(1), order), a);
    }
  }
}

TEST(TruncatedSeriesProperty, ZOrderIsAdditive) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> shift(0, 6);
  for (int round = 0; round < 300; ++round) {
    const std::size_t order = 16;
    const std::size_t sa = shift(rng);
    const std::size_t sb = shift(rng);
    TruncatedSeries a = random_series(rng, order) * z_power(sa, order);
    TruncatedSeries b = random_series(rng, order) * z_power(sb, order);
    const auto oa = a.z_order();
    const auto ob = b.z_order();
    if (!oa || !ob || *oa + *ob >= order) continue;
    EXPECT_EQ((a * b).z_order(), std::optional<std::size_t>(*oa + *ob));
  }
}

TEST(SqrtCoeff, Examples) {
  EXPECT_EQ(thetagw::sqrt_coeff(0), (ZMonomial{Rational(1), 0}));
  EXPECT_EQ(thetagw::sqrt_coeff(1), (ZMonomial{Rational(-1, 2), 1}));
  EXPECT_EQ(thetagw::sqrt_coeff(2), (ZMonomial{Rational(-1, 8), 2}));
  EXPECT_THROW(thetagw::sqrt_coeff(-1), std::invalid_argument);
}

TEST(SqrtCoeff, MatchesGeneralizedBinomial) {
  for (int j = 0; j <= 40; ++j) {
    const ZMonomial c = thetagw::sqrt_coeff(j);
    EXPECT_EQ(c.degree, j);
    EXPECT_EQ(c.coeff, thetagw::oracle::sqrt_one_minus_x(j)) << j;
  }
}

TEST(SqrtCoeff, SquareReproducesOneMinusZOverW) {
  for (int J = 0; J <= 16; ++J) {
    const std::size_t order = static_cast<std::size_t>(2 * J + 2);
    const WLaurent s = thetagw::sqrt_expansion(J, order);
    const WLaurent square = (s * s).truncated_below(-J);
    WLaurent expected;
    expected.add_term(0, TruncatedSeries::constant(Rational(1), order));
    if (J >= 1) expected.add_term(-1, TruncatedSeries::monomial(Rational(-1), 1, order));
    EXPECT_EQ(square, expected) << J;
  }
}

TEST(WLaurent, ZeroTermsAreNeverStored) {
  WLaurent p;
  p.add_term(3, TruncatedSeries(4));
  EXPECT_TRUE(p.is_zero());
  p.add_term(1, TruncatedSeries::constant(Rational(2), 4));
  p.add_term(1, TruncatedSeries::constant(Rational(-2), 4));
  EXPECT_TRUE(p.is_zero());
  p.add_term(-2, z_power(1, 4));
  EXPECT_EQ(p.min_exponent(), std::optional<int>(-2));
  const WLaurent q = p - p;
  EXPECT_TRUE(q.is_zero());
  EXPECT_EQ(p.shifted(5).min_exponent(), std::optional<int>(3));
}

TEST(WLaurent, NonnegCheckExamples) {
  WLaurent poly;  // w + 1
  poly.add_term(1, TruncatedSeries::constant(Rational(1), 4));
  poly.add_term(0, TruncatedSeries::constant(Rational(1), 4));
  EXPECT_TRUE(thetagw::wlaurent_nonneg_check(poly, 4));

  WLaurent tail;  // z^2 w^{-1}
  tail.add_term(-1, z_power(2, 4));
  EXPECT_TRUE(thetagw::wlaurent_nonneg_check(tail, 2));
  EXPECT_FALSE(thetagw::wlaurent_nonneg_check(tail, 3));
  EXPECT_THROW(thetagw::wlaurent_nonneg_check(tail, 5), std::invalid_argument);
}
