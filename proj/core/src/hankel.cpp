#include "thetagw/hankel.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "thetagw/error.hpp"

namespace thetagw {

Rational bareiss_determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational sign(1);
  Rational prev_pivot(1);
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (m(p, p).is_zero()) {
      std::size_t swap_row = p + 1;
      while (swap_row < n && m(swap_row, p).is_zero()) ++swap_row;
      if (swap_row == n) return Rational(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(p, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = p + 1; i < n; ++i) {
      for (std::size_t j = p + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / prev_pivot;
      }
      m(i, p) = Rational(0);
    }
    prev_pivot = m(p, p);
  }
  return sign * m(n - 1, n - 1);
}

GradedHankel GradedHankel::build(int k, int shift) {
  if (k < 1) throw std::invalid_argument("GradedHankel: k must be positive");
  if (shift != 1 && shift != 2) throw std::invalid_argument("GradedHankel: shift must be 1 or 2");
  GradedHankel out;
  out.k = k;
  out.shift = shift;
  out.numeric = RationalMatrix(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) out.numeric(i, j) = sqrt_coeff(shift + i + j).coeff;
  }
  return out;
}

ZMonomial GradedHankel::entry(int row, int col) const {
  return {numeric(static_cast<std::size_t>(row), static_cast<std::size_t>(col)), entry_degree(row, col)};
}

ZMonomial hankel_det(int k, int shift) {
  const GradedHankel hk = GradedHankel::build(k, shift);
  return {bareiss_determinant(hk.numeric), hk.determinant_degree()};
}

ZMonomial hankel_det_closed_form(int k, int shift) {
  if (k < 1) throw std::invalid_argument("hankel_det_closed_form: k must be positive");
  const long kk = static_cast<long>(k) * k;
  if (shift == 1) return {sign_power(k) * pow2(-(2 * kk - k)), static_cast<int>(kk)};
  if (shift == 2) return {sign_power(k) * pow2(-(2 * kk + k)), static_cast<int>(kk + k)};
  throw std::invalid_argument("hankel_det_closed_form: shift must be 1 or 2");
}

ZMonomial BSolution::b(int j) const {
  if (j < 0 || j > k) throw std::out_of_range("BSolution::b: index out of range");
  if (j == 0) return {Rational(1), 0};
  return unknowns[static_cast<std::size_t>(k - j)];
}

BSolution solve_b(int k) {
  const GradedHankel system = GradedHankel::build(k, 1);
  const auto n = static_cast<std::size_t>(k);
  // Row i encodes the vanishing of C_{k+1+i}; its right-hand side is -D_{k+1+i}.
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = -sqrt_coeff(k + 1 + static_cast<int>(i)).coeff;

  const Rational det = bareiss_determinant(system.numeric);
  if (det.is_zero()) throw InternalInconsistency("numeric Hankel matrix is singular at k=" + std::to_string(k));

  BSolution out;
  out.k = k;
  out.unknowns.reserve(n);
  for (std::size_t col = 0; col < n; ++col) {
    RationalMatrix replaced = system.numeric;
    for (std::size_t i = 0; i < n; ++i) replaced(i, col) = rhs[i];
    // column `col` multiplies B_{k-col}, which has z-degree k-col
    out.unknowns.push_back({bareiss_determinant(std::move(replaced)) / det, k - static_cast<int>(col)});
  }
  const ZMonomial expected{Rational(-4).pow(-k), k};
  if (!(out.unknowns.front() == expected)) {
    throw InternalInconsistency("leading unknown B_k = " + out.unknowns.front().to_string() + ", expected " +
                                expected.to_string());
  }
  return out;
}

CongruenceReport branch_congruence_report(int k, int n) {
  if (k < 0) throw std::invalid_argument("branch_congruence_report: k must be nonnegative");
  if (n < 1) throw std::invalid_argument("branch_congruence_report: n must be positive");

  CongruenceReport report;
  report.k = k;
  report.n = n;
  report.order = static_cast<std::size_t>(std::max(n, 2 * k + 2));
  const std::size_t order = report.order;

  WLaurent g;
  ZMonomial leading{Rational(1), 0};
  if (k == 0) {
    g.add_term(0, TruncatedSeries::constant(Rational(1), order));
  } else {
    const BSolution sol = solve_b(k);
    for (int j = 0; j <= k; ++j) g.add_term(-j, TruncatedSeries::from(sol.b(j), order));
    leading = sol.b(k);
  }

  const int top = 2 * k + 1;
  const WLaurent h = (sqrt_expansion(top, order) * g).truncated_below(-top);

  WLaurent f;
  for (int j = 0; j <= k; ++j) {
    if (auto c = h.coefficient(-j)) f.add_term(-j, *c);
  }

  report.residual = ((f * f) - (h * h)).shifted(top);
  report.tail_vanishes = wlaurent_nonneg_check(report.residual, static_cast<std::size_t>(n));

  const ZMonomial obstruction = ZMonomial{Rational(1), 1} * leading * leading;
  report.constant_vanishes = obstruction.is_zero() || obstruction.degree >= n;

  report.polynomial_vanishes = true;
  for (const auto& [e, c] : report.residual.terms()) {
    if (e > 0 && !c.vanishes_below(static_cast<std::size_t>(n))) report.polynomial_vanishes = false;
  }
  return report;
}

int max_solvable_order(int k) {
  int best = 0;
  for (int n = 1; n <= 2 * k + 3; ++n) {
    if (!verify_branch_congruence(k, n)) break;
    best = n;
  }
  return best;
}

}  // namespace thetagw
