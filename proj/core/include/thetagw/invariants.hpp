#pragma once

#include <span>
#include <vector>

#include "thetagw/rational.hpp"
#include "thetagw/spin_parity.hpp"

namespace thetagw {

/// A request for <prod tau_{alpha_i}(pt)> in degree d[D] on a surface whose
/// canonical divisor D has genus h and theta characteristic L of the given parity.
struct InvariantQuery {
  int degree = 1;
  int genus = 0;
  Parity parity = Parity::even;
  std::vector<int> alphas;

  int insertions() const { return static_cast<int>(alphas.size()); }
  /// Euler characteristic of the domain fixed by the dimension constraint.
  long chi() const;
  /// Throws std::invalid_argument unless degree is 1 or 2, genus >= 0 and every alpha >= 0.
  void validate() const;
};

/// alpha! / (2 alpha + 1)! * (-2)^{-alpha}: one point insertion in degree one.
Rational degree1_block(int alpha);
/// alpha! / (2 alpha + 1)! * (-2)^{alpha}: one point insertion in degree two.
Rational degree2_block(int alpha);

/// (-1)^{h^0(L)} prod_i degree1_block(alpha_i).
Rational degree1(const InvariantQuery& q);
/// (-1)^{h^0(L)} 2^{h+n-1} prod_i degree2_block(alpha_i).
Rational degree2(const InvariantQuery& q);
/// Dispatches on q.degree.
Rational evaluate(const InvariantQuery& q);

/// Degree-two invariant of the total space of O(-1) over P^1:
/// 2^{n-1} prod_i degree2_block(alpha_i).
Rational degree2_over_p1(std::span<const int> alphas);

/// Relative invariants of the two halves of the degeneration, each reduced to
/// its coefficient against the point class of E^l.
struct RelativeValues {
  Rational cap_split_unit;         ///< <1>^{(Y1,E)}_{(1,1)}, equal to (-1)^{h^0(L)} 2^h
  Rational bubble_split_tau1;      ///< <tau_1(pt)>^{(Y2,E)}_{(1,1)} * [pt^2] = -1/6
  Rational bubble_single_unit;     ///< <1>^{(Y2,E)}_{(1)} * [pt] = 1
  Rational bubble_single_tau1;     ///< <tau_1(pt)>^{(Y2,E)}_{(1)} * [pt] = -1/12
};

RelativeValues relative_values(int h, Parity parity);

/// Twisted degree-two tau_1 invariant of D split into the branched-cover
/// component and the 2^{2h} etale components. Requires h >= 2.
struct TwistedBreakdown {
  int h = 0;
  Rational total;      ///< (h - 8/3) 2^{2h-3}
  Rational per_etale;  ///< -1/12
  BigInt etale_count;  ///< 2^{2h}
  Rational n0_part;    ///< (h - 2) 2^{2h-3}
};

/// Throws InternalInconsistency if total - etale_count * per_etale != n0_part.
TwistedBreakdown twisted_breakdown(int h);

/// <tau_1(pt)> in degree two, split by connected components of the moduli space.
struct Tau1Decomposition {
  Rational etale_total;  ///< all etale double covers, each contributing (-1)^{h^0(u^*L)} (-1/12)
  Rational n0_total;     ///< branched double covers: (-1)^{h^0(L)} (-2^{h-2})
  Rational grand_total;  ///< etale_total + n0_total
};

Tau1Decomposition degree2_tau1_decomposition(int h, Parity parity);

}  // namespace thetagw
