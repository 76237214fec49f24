#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "thetagw/error.hpp"
#include "thetagw/hankel.hpp"

using thetagw::GradedHankel;
using thetagw::Rational;
using thetagw::RationalMatrix;
using thetagw::ZMonomial;

namespace {

std::vector<std::vector<Rational>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.size(), std::vector<Rational>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

}  // namespace

TEST(Bareiss, AgreesWithLeibnizOnRandomMatrices) {
  std::mt19937_64 rng(5);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int round = 0; round < 20; ++round) {
      RationalMatrix m(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m(i, j) = thetagw::oracle::random_rational(rng, 6);
      }
      EXPECT_EQ(thetagw::bareiss_determinant(m), thetagw::oracle::leibniz_determinant(to_rows(m)));
    }
  }
}

TEST(Bareiss, PivotsAndSingularities) {
  RationalMatrix swap(2);  // [[0,1],[1,0]]
  swap(0, 1) = Rational(1);
  swap(1, 0) = Rational(1);
  EXPECT_EQ(thetagw::bareiss_determinant(swap), Rational(-1));
  RationalMatrix singular(3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) singular(i, j) = Rational(static_cast<long>(i + j));
  }
  EXPECT_EQ(thetagw::bareiss_determinant(singular), Rational(0));
  EXPECT_EQ(thetagw::bareiss_determinant(RationalMatrix(0)), Rational(1));
}

TEST(GradedHankel, EntryGrading) {
  const GradedHankel m = GradedHankel::build(4, 2);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      EXPECT_EQ(m.entry(i, j), thetagw::sqrt_coeff(2 + i + j));
      EXPECT_EQ(m.entry_degree(i, j), 2 + i + j);
    }
  }
  EXPECT_THROW(GradedHankel::build(0, 1), std::invalid_argument);
  EXPECT_THROW(GradedHankel::build(2, 3), std::invalid_argument);
}

TEST(HankelDet, SmallCases) {
  EXPECT_EQ(thetagw::hankel_det(1, 1), (ZMonomial{Rational(-1, 2), 1}));
  EXPECT_EQ(thetagw::hankel_det(1, 2), (ZMonomial{Rational(-1, 8), 2}));
}

TEST(HankelDet, ClosedFormsThroughEight) {
  for (int k = 1; k <= 8; ++k) {
    const ZMonomial d1 = thetagw::hankel_det(k, 1);
    EXPECT_EQ(d1, (ZMonomial{thetagw::sign_power(k) * thetagw::pow2(-(2 * k * k - k)), k * k})) << k;
    const ZMonomial d2 = thetagw::hankel_det(k, 2);
    EXPECT_EQ(d2, (ZMonomial{thetagw::sign_power(k) * thetagw::pow2(-(2 * k * k + k)), k * k + k})) << k;
    EXPECT_EQ(d1, thetagw::hankel_det_closed_form(k, 1));
    EXPECT_EQ(d2, thetagw::hankel_det_closed_form(k, 2));
  }
}

TEST(HankelDet, LeibnizOracleOnGeneralizedBinomialEntries) {
  // Built from the binomial series coefficients directly; no call into
  // sqrt_coeff or the Bareiss routine.
  for (int k = 1; k <= 7; ++k) {
    for (int shift : {1, 2}) {
      std::vector<std::vector<Rational>> rows(k, std::vector<Rational>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) rows[i][j] = thetagw::oracle::sqrt_one_minus_x(shift + i + j);
      }
      EXPECT_EQ(thetagw::hankel_det(k, shift).coeff, thetagw::oracle::leibniz_determinant(rows)) << k << "," << shift;
    }
  }
}

TEST(SolveB, SmallCases) {
  const auto one = thetagw::solve_b(1);
  EXPECT_EQ(one.b(1), (ZMonomial{Rational(-1, 4), 1}));
  const auto two = thetagw::solve_b(2);
  EXPECT_EQ(two.b(2), (ZMonomial{Rational(1, 16), 2}));
  EXPECT_EQ(two.b(0), (ZMonomial{Rational(1), 0}));
  EXPECT_THROW(two.b(3), std::out_of_range);
}

TEST(SolveB, FrozenSolutions) {
  // Cramer oracle over Python fractions.
  const auto three = thetagw::solve_b(3);
  EXPECT_EQ(three.b(3), (ZMonomial{Rational(-1, 64), 3}));
  EXPECT_EQ(three.b(2), (ZMonomial{Rational(3, 8), 2}));
  EXPECT_EQ(three.b(1), (ZMonomial{Rational(-5, 4), 1}));
  const auto two = thetagw::solve_b(2);
  EXPECT_EQ(two.b(1), (ZMonomial{Rational(-3, 4), 1}));
  const auto six = thetagw::solve_b(6);
  EXPECT_EQ(six.b(1), (ZMonomial{Rational(-11, 4), 1}));
  EXPECT_EQ(six.b(4), (ZMonomial{Rational(35, 128), 4}));
}

TEST(SolveB, LeadingTermAndBackSubstitution) {
  for (int k = 1; k <= 6; ++k) {
    const auto sol = thetagw::solve_b(k);
    EXPECT_EQ(sol.b(k), (ZMonomial{Rational(-4).pow(-k), k}));
    for (int j = 1; j <= k; ++j) {
      EXPECT_EQ(sol.b(j).degree, j);
      EXPECT_FALSE(sol.b(j).is_zero());
    }
    // C_m = sum_i D_{m-i} B_i must vanish for k < m <= 2k, exactly.
    for (int m = k + 1; m <= 2 * k; ++m) {
      Rational c(0);
      for (int i = 0; i <= k; ++i) {
        const ZMonomial term = thetagw::sqrt_coeff(m - i) * sol.b(i);
        EXPECT_EQ(term.degree, m);
        c += term.coeff;
      }
      EXPECT_TRUE(c.is_zero()) << "k=" << k << " m=" << m;
    }
  }
}

TEST(BranchCongruence, SolvabilityBoundary) {
  for (int k = 1; k <= 5; ++k) {
    EXPECT_TRUE(thetagw::verify_branch_congruence(k, 2 * k + 1)) << k;
    EXPECT_FALSE(thetagw::verify_branch_congruence(k, 2 * k + 2)) << k;
  }
  EXPECT_TRUE(thetagw::verify_branch_congruence(1, 1));
}

TEST(BranchCongruence, FailureComesFromTheConstantCoefficient) {
  for (int k = 0; k <= 5; ++k) {
    const auto above = thetagw::branch_congruence_report(k, 2 * k + 2);
    EXPECT_TRUE(above.tail_vanishes);
    EXPECT_TRUE(above.polynomial_vanishes);
    EXPECT_FALSE(above.constant_vanishes);
  }
}

TEST(BranchCongruence, ResidualConstantTermIsTheObstruction) {
  for (int k = 1; k <= 5; ++k) {
    const auto report = thetagw::branch_congruence_report(k, 2 * k + 2);
    const auto constant = report.residual.coefficient(0);
    ASSERT_TRUE(constant.has_value());
    const ZMonomial bk = thetagw::solve_b(k).b(k);
    const ZMonomial obstruction = ZMonomial{Rational(1), 1} * bk * bk;
    EXPECT_EQ(constant->z_order(), std::optional<std::size_t>(obstruction.degree));
    EXPECT_EQ(constant->coeff(static_cast<std::size_t>(obstruction.degree)), obstruction.coeff);
    // nothing with positive w-exponent survives
    EXPECT_LE(*report.residual.max_exponent(), 0);
  }
}

TEST(BranchCongruence, KOneResidualPassesNonnegCheck) {
  const auto report = thetagw::branch_congruence_report(1, 3);
  EXPECT_TRUE(thetagw::wlaurent_nonneg_check(report.residual, 3));
  EXPECT_TRUE(report.holds());
}

TEST(BranchCongruence, MonotoneInModulus) {
  for (int k = 0; k <= 5; ++k) {
    bool seen_false = false;
    for (int n = 1; n <= 2 * k + 5; ++n) {
      const bool ok = thetagw::verify_branch_congruence(k, n);
      if (seen_false) EXPECT_FALSE(ok) << "k=" << k << " n=" << n;
      if (!ok) seen_false = true;
    }
  }
}

TEST(BranchCongruence, TorsionExponentsAreOddNumbers) {
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(thetagw::max_solvable_order(i - 1), 2 * i - 1);
}

TEST(BranchCongruence, RejectsBadArguments) {
  EXPECT_THROW(thetagw::branch_congruence_report(-1, 3), std::invalid_argument);
  EXPECT_THROW(thetagw::branch_congruence_report(2, 0), std::invalid_argument);
}
