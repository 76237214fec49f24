#include "thetagw/invariants.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "thetagw/combinatorics.hpp"
#include "thetagw/error.hpp"

namespace thetagw {

namespace {

Rational factorial_ratio(int alpha) {
  if (alpha < 0) throw std::invalid_argument("descendant exponent must be nonnegative");
  return Rational(factorial(alpha), factorial(2L * alpha + 1));
}

Rational block_product(std::span<const int> alphas, Rational (*block)(int)) {
  Rational out(1);
  for (int a : alphas) out *= block(a);
  return out;
}

}  // namespace

long InvariantQuery::chi() const { return required_chi(degree, genus, alphas); }

void InvariantQuery::validate() const {
  if (degree != 1 && degree != 2) throw std::invalid_argument("degree must be 1 or 2, got " + std::to_string(degree));
  if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
  if (std::any_of(alphas.begin(), alphas.end(), [](int a) { return a < 0; })) {
    throw std::invalid_argument("descendant exponents must be nonnegative");
  }
}

Rational degree1_block(int alpha) { return factorial_ratio(alpha) * Rational(-2).pow(-alpha); }

Rational degree2_block(int alpha) { return factorial_ratio(alpha) * Rational(-2).pow(alpha); }

Rational degree1(const InvariantQuery& q) {
  q.validate();
  if (q.degree != 1) throw std::invalid_argument("degree1: query has degree " + std::to_string(q.degree));
  return parity_sign(q.parity) * block_product(q.alphas, degree1_block);
}

Rational degree2(const InvariantQuery& q) {
  q.validate();
  if (q.degree != 2) throw std::invalid_argument("degree2: query has degree " + std::to_string(q.degree));
  return parity_sign(q.parity) * pow2(q.genus + q.insertions() - 1) * block_product(q.alphas, degree2_block);
}

Rational evaluate(const InvariantQuery& q) { return q.degree == 1 ? degree1(q) : degree2(q); }

Rational degree2_over_p1(std::span<const int> alphas) {
  return pow2(static_cast<long>(alphas.size()) - 1) * block_product(alphas, degree2_block);
}

RelativeValues relative_values(int h, Parity parity) {
  if (h < 0) throw std::invalid_argument("relative_values: genus must be nonnegative");
  RelativeValues v;
  v.cap_split_unit = parity_sign(parity) * pow2(h);
  v.bubble_split_tau1 = Rational(-1, 6);
  v.bubble_single_unit = Rational(1);
  v.bubble_single_tau1 = degree1_block(1);
  return v;
}

TwistedBreakdown twisted_breakdown(int h) {
  if (h < 2) throw std::invalid_argument("twisted_breakdown: genus must be at least 2");
  TwistedBreakdown t;
  t.h = h;
  const Rational scale = pow2(2L * h - 3);
  t.total = (Rational(h) - Rational(8, 3)) * scale;
  t.per_etale = Rational(-1, 12);
  t.etale_count = pow2(2L * h).numerator();
  t.n0_part = Rational(h - 2) * scale;
  if (t.total - Rational(t.etale_count) * t.per_etale != t.n0_part) {
    throw InternalInconsistency("twisted breakdown does not balance at h=" + std::to_string(h));
  }
  return t;
}

Tau1Decomposition degree2_tau1_decomposition(int h, Parity parity) {
  if (h < 0) throw std::invalid_argument("degree2_tau1_decomposition: genus must be nonnegative");
  const Rational s = parity_sign(parity);
  Tau1Decomposition d;
  d.etale_total = signed_double_cover_sum(h, parity, CoverWeighting::unweighted) * degree1_block(1);
  d.n0_total = s * (-pow2(h - 2));
  d.grand_total = d.etale_total + d.n0_total;
  return d;
}

}  // namespace thetagw
