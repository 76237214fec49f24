#include "thetagw/torsion_ledger.hpp"

#include <stdexcept>
#include <string>

#include "thetagw/combinatorics.hpp"
#include "thetagw/error.hpp"

namespace thetagw {

namespace {

void require_genus(int h, const char* who) {
  if (h < 2) throw std::invalid_argument(std::string(who) + ": genus must be at least 2");
}

// Torsion exponents at a point of the family: 2i+1 (Lambda') or 2i+2 (Lambda'').
long exponent(int i, bool odd_index) { return odd_index ? 2L * i + 2 : 2L * i + 1; }

}  // namespace

TorsionLedger build_ledger(int h) {
  require_genus(h, "build_ledger");
  TorsionLedger ledger;
  ledger.h = h;
  for (int j = 0; j <= h - 2; ++j) {
    const int r = j / 2;
    const bool odd_index = (j % 2) == 1;
    long a = 0;
    long b = 0;
    for (int i = 0; i <= r; ++i) {
      a += exponent(i, odd_index);
      b += ((r + 1 - i) % 2 == 0 ? 1 : -1) * exponent(i, odd_index);
    }
    const long closed = odd_index ? static_cast<long>(r + 1) * (r + 2) : static_cast<long>(r + 1) * (r + 1);
    if (a != closed) throw InternalInconsistency("a_" + std::to_string(j) + " disagrees with its closed form");
    ledger.a.push_back(a);
    ledger.b.push_back(b);
  }
  for (int r = 0; h - 2 - 2 * r >= 0; ++r) ledger.lambda_prime.push_back(binomial(2L * h + 2, h - 2 - 2 * r));
  for (int r = 0; h - 3 - 2 * r >= 0; ++r) ledger.lambda_dblprime.push_back(binomial(2L * h + 2, h - 3 - 2 * r));
  return ledger;
}

Rational n0_component_value(int h) {
  const TorsionLedger ledger = build_ledger(h);
  Rational torsion(0);
  for (int j = 0; j <= h - 2; ++j) {
    torsion += Rational(binomial(2L * h + 2, h - 2 - j)) * Rational(ledger.a[j] - ledger.b[j], 2);
  }
  return Rational(h - 2) * pow2(2L * h - 3) - torsion;
}

bool n0_identity(int h) { return n0_component_value(h) == -pow2(h - 2); }

Rational n0_dominant_display_value(int h) {
  const TorsionLedger ledger = build_ledger(h);
  Rational torsion(0);
  for (int j = 0; j <= h - 2; ++j) torsion += Rational(binomial(2L * h + 2, h - 2 - j)) * Rational(ledger.a[j]);
  return Rational(h - 2) * pow2(2L * h - 3) - torsion;
}

TorsionDegrees torsion_degrees(int h) {
  const TorsionLedger ledger = build_ledger(h);
  TorsionDegrees out;
  for (std::size_t r = 0; r < ledger.lambda_prime.size(); ++r) {
    out.over_lambda_prime += Rational(ledger.a[2 * r], 2) * Rational(ledger.lambda_prime[r]);
  }
  for (std::size_t r = 0; r < ledger.lambda_dblprime.size(); ++r) {
    out.over_lambda_dblprime += Rational(ledger.a[2 * r + 1], 2) * Rational(ledger.lambda_dblprime[r]);
  }
  return out;
}

std::vector<ConeComponent> cone_multiplicity_table(int r, ConeFamily family) {
  if (r < 0) throw std::invalid_argument("cone_multiplicity_table: r must be nonnegative");
  std::vector<ConeComponent> out;
  for (int i = 0; i <= r; ++i) {
    out.push_back({r + 1 - i, family == ConeFamily::prime ? 2 * i + 1 : 2 * i + 2});
  }
  return out;
}

long signed_cone_sum(const std::vector<ConeComponent>& table) {
  long sum = 0;
  for (const auto& c : table) sum += (c.rank_defect % 2 == 0 ? 1 : -1) * static_cast<long>(c.multiplicity);
  return sum;
}

}  // namespace thetagw
