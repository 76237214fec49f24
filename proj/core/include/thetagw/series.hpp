#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thetagw/rational.hpp"

namespace thetagw {

/// c * z^degree. Every coefficient in the graded systems is one of these.
struct ZMonomial {
  Rational coeff;
  int degree = 0;

  bool is_zero() const { return coeff.is_zero(); }
  std::string to_string() const;

  friend ZMonomial operator*(const ZMonomial& lhs, const ZMonomial& rhs) {
    return {lhs.coeff * rhs.coeff, lhs.degree + rhs.degree};
  }
  friend bool operator==(const ZMonomial& lhs, const ZMonomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return lhs.is_zero() && rhs.is_zero();
    return lhs.coeff == rhs.coeff && lhs.degree == rhs.degree;
  }
};

/// Power series in z over Rational, known modulo z^order.
///
/// Coefficients are stored densely for z^0 .. z^{order-1}. Binary operations
/// on operands of different orders produce a result valid modulo the smaller
/// order, since nothing beyond it is known.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order = 1);
  /// Coefficients beyond `order` are discarded; missing ones are zero.
  TruncatedSeries(std::vector<Rational> coeffs, std::size_t order);

  static TruncatedSeries monomial(const Rational& coeff, std::size_t exponent, std::size_t order);
  static TruncatedSeries from(const ZMonomial& m, std::size_t order);
  static TruncatedSeries constant(const Rational& c, std::size_t order) { return monomial(c, 0, order); }

  std::size_t order() const { return coeffs_.size(); }
  /// Coefficient of z^i, i < order().
  const Rational& coeff(std::size_t i) const { return coeffs_.at(i); }
  std::span<const Rational> coefficients() const { return coeffs_; }

  /// Index of the first nonzero coefficient; nullopt when all stored
  /// coefficients vanish (the series is zero modulo z^order).
  std::optional<std::size_t> z_order() const;
  bool is_zero() const { return !z_order().has_value(); }
  /// True iff every coefficient of z^i with i < zmod is zero. zmod <= order().
  bool vanishes_below(std::size_t zmod) const;

  /// Same series known only modulo z^new_order (new_order <= order()).
  TruncatedSeries truncated(std::size_t new_order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
  friend TruncatedSeries operator-(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs -= rhs; }
  friend TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
  friend TruncatedSeries operator*(TruncatedSeries lhs, const Rational& rhs) { return lhs *= rhs; }
  friend TruncatedSeries operator*(const Rational& lhs, TruncatedSeries rhs) { return rhs *= lhs; }
  TruncatedSeries operator-() const;

  friend bool operator==(const TruncatedSeries& lhs, const TruncatedSeries& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// "c0 + c1*z + ... + O(z^N)"; zero coefficients are skipped.
  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Cauchy product modulo z^{min order}.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Finite Laurent polynomial in w whose coefficients are truncated z-series.
/// Terms whose coefficient series is zero modulo its order are never stored.
class WLaurent {
 public:
  using TermMap = std::map<int, TruncatedSeries>;

  WLaurent() = default;

  /// Adds `coeff * w^exponent` into the polynomial.
  void add_term(int exponent, const TruncatedSeries& coeff);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<TruncatedSeries> coefficient(int exponent) const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  /// Multiplies by w^shift.
  WLaurent shifted(int shift) const;
  /// Drops every term whose w-exponent is below `min_exponent`.
  WLaurent truncated_below(int min_exponent) const;

  WLaurent& operator+=(const WLaurent& rhs);
  WLaurent& operator-=(const WLaurent& rhs);
  friend WLaurent operator+(WLaurent lhs, const WLaurent& rhs) { return lhs += rhs; }
  friend WLaurent operator-(WLaurent lhs, const WLaurent& rhs) { return lhs -= rhs; }
  friend WLaurent operator*(const WLaurent& lhs, const WLaurent& rhs);
  WLaurent operator-() const;

  friend bool operator==(const WLaurent& lhs, const WLaurent& rhs) { return lhs.terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Coefficient of w^{-j} in sqrt(1 - z/w), which is c_j * z^j.
/// c_0 = 1 and c_j = -2^{1-2j} (1/j) C(2j-2, j-1) for j >= 1.
ZMonomial sqrt_coeff(int j);

/// sum_{j=0}^{max_j} sqrt_coeff(j) w^{-j}, each coefficient held modulo z^order.
WLaurent sqrt_expansion(int max_j, std::size_t order);

/// True iff every term of `p` with negative w-exponent vanishes modulo z^zmod.
/// Throws std::invalid_argument if zmod exceeds the order of any stored coefficient.
bool wlaurent_nonneg_check(const WLaurent& p, std::size_t zmod);

}  // namespace thetagw
