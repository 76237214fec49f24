#pragma once

#include <vector>

#include "thetagw/rational.hpp"

namespace thetagw {

/// Integer sequences feeding the branched-cover contribution at genus h >= 2.
///
/// Index j runs over 0..h-2. Even j = 2r belongs to the locus Lambda'_r
/// (torsion exponents 1, 3, ..., 2r+1), odd j = 2r+1 to Lambda''_r
/// (exponents 2, 4, ..., 2r+2).
struct TorsionLedger {
  int h = 0;
  std::vector<long> a;  ///< total torsion degree per point
  std::vector<long> b;  ///< signed cone multiplicity sums, (-1)^l and 1/2 factored out
  /// |Lambda'_r| = C(2h+2, h-2-2r), r = 0..floor((h-2)/2)
  std::vector<BigInt> lambda_prime;
  /// |Lambda''_r| = C(2h+2, h-3-2r), r = 0..floor((h-3)/2)
  std::vector<BigInt> lambda_dblprime;
};

/// Fills the ledger from the defining finite sums and cross-checks the closed
/// forms a_{2r} = (r+1)^2 and a_{2r+1} = (r+1)(r+2).
TorsionLedger build_ledger(int h);

/// (h-2) 2^{2h-3} - sum_{j=0}^{h-2} C(2h+2, h-2-j) (a_j - b_j)/2, before the sign (-1)^{h^0(L)}.
Rational n0_component_value(int h);

/// The identity n0_component_value(h) == -2^{h-2}.
bool n0_identity(int h);

/// Dominant-component value using sum C(2h+2, h-2-j) a_j with no 1/2 and no
/// cone terms. Agrees with n0_component_value only for h = 2, 3.
Rational n0_dominant_display_value(int h);

struct TorsionDegrees {
  Rational over_lambda_prime;
  Rational over_lambda_dblprime;
};

/// sum_r 1/2 a_{2r} |Lambda'_r| and sum_r 1/2 a_{2r+1} |Lambda''_r|.
TorsionDegrees torsion_degrees(int h);

enum class ConeFamily { prime, dblprime };

struct ConeComponent {
  int rank_defect = 0;
  int multiplicity = 0;

  friend bool operator==(const ConeComponent&, const ConeComponent&) = default;
};

/// Components of the cone over one point of Lambda'_r or Lambda''_r:
/// (r+1-i, 2i+1) resp. (r+1-i, 2i+2) for i = 0..r.
std::vector<ConeComponent> cone_multiplicity_table(int r, ConeFamily family);

/// sum (-1)^{rank_defect} multiplicity; reproduces b_{2r} resp. b_{2r+1}.
long signed_cone_sum(const std::vector<ConeComponent>& table);

}  // namespace thetagw
