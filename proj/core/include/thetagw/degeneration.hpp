#pragma once

#include <optional>
#include <span>
#include <vector>

#include "thetagw/combinatorics.hpp"
#include "thetagw/rational.hpp"
#include "thetagw/spin_parity.hpp"

namespace thetagw {

/// One partition-indexed term of the degree-two gluing sum.
///
/// For the (2) channel only the product of the two relative invariants is ever
/// determined; `cap_value` then carries the genus scaling (-1)^{h^0(L)} 2^h and
/// `bubble_value` the genus-zero product.
struct Channel {
  Partition eta;
  Rational coefficient;  ///< m(eta) / |Aut(eta)|
  Rational cap_value;
  std::optional<Rational> bubble_value;

  std::optional<Rational> contribution() const;
};

/// Bubble-side invariant for contact (1,1): a sum over every assignment of the
/// insertions to the two degree-one components, each component contributing
/// the product of degree-one blocks of the insertions it receives.
/// At most 24 insertions.
Rational relative_split_channel(std::span<const int> alphas);

/// Product of the cap and bubble invariants for contact (2) at genus zero,
/// solved from the gluing identity against degree2_over_p1.
Rational relative_tangent_channel(std::span<const int> alphas);

/// Both channels of the degree-two gluing sum at genus h.
std::vector<Channel> degree2_channels(int h, Parity parity, std::span<const int> alphas);

/// Sum of channel contributions (the right-hand side of the gluing identity).
Rational glued_degree2(int h, Parity parity, std::span<const int> alphas);

/// True iff degree2(h, parity, alphas) equals the glued value exactly.
bool check_degree2_gluing(int h, Parity parity, std::span<const int> alphas);

/// chi = chi_1 + chi_2 - l(eta).
long chi_constraint(long chi1, long chi2, const Partition& eta);

struct GluingSplit {
  Partition eta;
  long chi1 = 0;
  long chi2 = 0;
};

/// Every (eta, chi_1, chi_2) with |eta| = degree, chi_1 in [chi1_min, chi1_max]
/// and chi_1 + chi_2 - l(eta) = chi, in partition then chi_1 order.
std::vector<GluingSplit> enumerate_gluing_splits(int degree, long chi, long chi1_min, long chi1_max);

}  // namespace thetagw
