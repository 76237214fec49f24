#pragma once

#include <cstddef>
#include <vector>

#include "thetagw/rational.hpp"
#include "thetagw/series.hpp"

namespace thetagw {

/// Square matrix of Rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational bareiss_determinant(RationalMatrix m);

/// The k x k matrix (G_s G_{s+1} ... G_{s+k-1}) with G_j = (D_j, ..., D_{j+k-1})^t,
/// where D_j is the coefficient of w^{-j} in sqrt(1 - z/w).
///
/// Entry (i, j) is a monomial of z-degree shift + i + j, so the matrix is the
/// numeric matrix `numeric` with z-powers attached along anti-diagonals.
struct GradedHankel {
  int k = 0;
  int shift = 1;
  RationalMatrix numeric{0};

  static GradedHankel build(int k, int shift);

  int entry_degree(int row, int col) const { return shift + row + col; }
  ZMonomial entry(int row, int col) const;
  /// z-degree carried by every term of the Leibniz expansion.
  int determinant_degree() const { return k * shift + k * (k - 1); }
};

/// Exact determinant of GradedHankel::build(k, shift), shift in {1, 2}.
ZMonomial hankel_det(int k, int shift);

/// Closed forms (-1)^k / 2^{2k^2 - k} z^{k^2} (shift 1) and
/// (-1)^k / 2^{2k^2 + k} z^{k^2 + k} (shift 2).
ZMonomial hankel_det_closed_form(int k, int shift);

/// Graded solution of (G_1 ... G_k) B = -G_{k+1}.
struct BSolution {
  int k = 0;
  /// B_k, B_{k-1}, ..., B_1 in the order of the unknown vector.
  std::vector<ZMonomial> unknowns;

  /// B_j for 0 <= j <= k, with B_0 = 1.
  ZMonomial b(int j) const;
};

/// Solves by Cramer's rule on the numeric system, then re-grades.
/// Throws InternalInconsistency if the matrix is singular or B_k != (-4)^{-k} z^k.
BSolution solve_b(int k);

/// Pieces of the branch-point congruence check for one flag level k.
struct CongruenceReport {
  int k = 0;
  int n = 0;
  /// Truncation order used for every series in the expansion.
  std::size_t order = 0;
  WLaurent residual;           ///< w^{2k+1} (f^2 - h^2)
  bool tail_vanishes = false;  ///< wlaurent_nonneg_check(residual, n)
  bool constant_vanishes = false;  ///< z * B_k^2 == 0 mod z^n
  bool polynomial_vanishes = false;  ///< positive w-exponent terms of residual vanish mod z^n

  bool holds() const { return tail_vanishes && constant_vanishes && polynomial_vanishes; }
};

/// Builds g = sum B_j w^{-j} from solve_b(k), h = sqrt(1 - z/w) g expanded to
/// w^{-(2k+1)}, and f with A_j := C_j for j <= k, then checks
///   w prod (w - p_i)^2 == (w - z) prod (w - p_{r+i})^2  mod z^n.
/// Requires k >= 0, n >= 1; k = 0 is the empty flag level.
CongruenceReport branch_congruence_report(int k, int n);

inline bool verify_branch_congruence(int k, int n) { return branch_congruence_report(k, n).holds(); }

/// Largest n for which the congruence at flag level k is solvable (2k + 1).
int max_solvable_order(int k);

}  // namespace thetagw
