#include "thetagw/spin_parity.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "thetagw/error.hpp"

namespace thetagw {

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw std::invalid_argument("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

ParityCensus parity_census(int h) {
  if (h < 0) throw std::invalid_argument("parity_census: genus must be nonnegative");
  ParityCensus c;
  c.h = h;
  mpz_ui_pow_ui(c.total.get_mpz_t(), 2, 2UL * static_cast<unsigned long>(h));
  if (h == 0) {
    c.even_count = 1;
  } else {
    BigInt half;  // 2^{h-1}
    mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(h - 1));
    c.even_count = half * (2 * half + 1);
  }
  c.odd_count = c.total - c.even_count;
  return c;
}

ParityCensus arf_census_bruteforce(int h) {
  if (h < 1 || h > 6) throw std::invalid_argument("arf_census_bruteforce: genus must be in 1..6");
  // Bits 0..h-1 are a-coordinates, bits h..2h-1 are b-coordinates.
  const std::uint32_t dim = 2U * static_cast<std::uint32_t>(h);
  const std::uint32_t space = 1U << dim;
  const std::uint32_t low_mask = (1U << h) - 1U;
  const std::uint32_t even_threshold = (1U << (dim - 1)) + (1U << (h - 1));
  const std::uint32_t odd_threshold = (1U << (dim - 1)) - (1U << (h - 1));

  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  for (std::uint32_t basis_values = 0; basis_values < space; ++basis_values) {
    // q(x) = <x, basis values> + sum_i x_{a_i} x_{b_i}, the unique refinement
    // of the symplectic form with the prescribed values on the basis.
    std::uint32_t zeros = 0;
    for (std::uint32_t x = 0; x < space; ++x) {
      const int linear = std::popcount(x & basis_values);
      const int cross = std::popcount((x & low_mask) & (x >> h));
      if (((linear + cross) & 1) == 0) ++zeros;
    }
    int majority_arf;
    if (zeros == even_threshold) {
      majority_arf = 0;
    } else if (zeros == odd_threshold) {
      majority_arf = 1;
    } else {
      throw InternalInconsistency("refinement with " + std::to_string(zeros) + " zeros is neither even nor odd");
    }
    const int basis_arf = std::popcount((basis_values & low_mask) & (basis_values >> h)) & 1;
    if (basis_arf != majority_arf) throw InternalInconsistency("Arf invariant disagreement between basis and majority rules");
    (majority_arf == 0 ? even : odd) += 1;
  }

  ParityCensus c;
  c.h = h;
  c.total = static_cast<unsigned long>(space);
  c.even_count = static_cast<unsigned long>(even);
  c.odd_count = static_cast<unsigned long>(odd);
  return c;
}

Rational signed_double_cover_sum(int h, Parity parity, CoverWeighting weighting) {
  const ParityCensus census = parity_census(h);
  // xi ranges over all 2-torsion bundles, so L (x) xi ranges over every theta
  // characteristic exactly once; h^0(u^*L) is even iff L (x) xi has L's parity.
  const Rational agreement(BigInt(census.even_count - census.odd_count));
  Rational sum = parity_sign(parity) * agreement;
  switch (weighting) {
    case CoverWeighting::unweighted:
      return sum;
    case CoverWeighting::weighted:
      return sum / Rational(2);
    case CoverWeighting::connected_weighted:
      // the trivial bundle gives the split cover D + D with h^0(u^*L) = 2 h^0(L)
      return (sum - Rational(1)) / Rational(2);
  }
  throw std::invalid_argument("signed_double_cover_sum: unknown weighting");
}

}  // namespace thetagw
