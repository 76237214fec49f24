#pragma once

#include <string>
#include <string_view>

#include "thetagw/rational.hpp"

namespace thetagw {

/// h^0(L) mod 2 for a theta characteristic L.
enum class Parity { even = 0, odd = 1 };

inline int parity_bit(Parity p) { return static_cast<int>(p); }
inline Rational parity_sign(Parity p) { return sign_power(parity_bit(p)); }
std::string_view to_string(Parity p);
/// Accepts "even" / "odd"; throws std::invalid_argument otherwise.
Parity parse_parity(std::string_view text);

/// Distribution of parities over the 2^{2h} theta characteristics of a genus-h curve.
struct ParityCensus {
  int h = 0;
  BigInt total;
  BigInt even_count;
  BigInt odd_count;

  friend bool operator==(const ParityCensus&, const ParityCensus&) = default;
};

/// Closed form: even = 2^{h-1}(2^h + 1) for h >= 1, and 1 for h = 0.
ParityCensus parity_census(int h);

/// Counts quadratic refinements of the standard symplectic form on F_2^{2h}
/// by Arf invariant, 1 <= h <= 6.
///
/// Every refinement is evaluated on all 2^{2h} vectors and classified by the
/// value it takes most often (Arf 0 iff q vanishes on 2^{2h-1} + 2^{h-1}
/// vectors). That classification is cross-checked against the symplectic-basis
/// formula Arf(q) = sum_i q(a_i) q(b_i).
ParityCensus arf_census_bruteforce(int h);

enum class CoverWeighting {
  unweighted,          ///< every 2-torsion bundle, weight 1
  weighted,            ///< every 2-torsion bundle, weight 1/|Aut| = 1/2
  connected_weighted,  ///< nontrivial 2-torsion only, weight 1/2
};

/// Sum over double covers u: C -> D given by 2-torsion bundles xi of
/// (-1)^{h^0(u^*L)}, with h^0(u^*L) = h^0(L) + h^0(L (x) xi) mod 2 and
/// xi -> L (x) xi a bijection onto the theta characteristics.
Rational signed_double_cover_sum(int h, Parity parity, CoverWeighting weighting);

}  // namespace thetagw
