#include "thetagw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "thetagw/combinatorics.hpp"

namespace thetagw {

std::string ZMonomial::to_string() const {
  if (is_zero()) return "0";
  if (degree == 0) return coeff.to_string();
  std::string out = coeff.to_string() + "*z";
  if (degree != 1) out += "^" + std::to_string(degree);
  return out;
}

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order) {
  if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be positive");
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
  if (order == 0) throw std::invalid_argument("TruncatedSeries: order must be positive");
  coeffs_.resize(order);
}

TruncatedSeries TruncatedSeries::monomial(const Rational& coeff, std::size_t exponent, std::size_t order) {
  TruncatedSeries out(order);
  if (exponent < order) out.coeffs_[exponent] = coeff;
  return out;
}

TruncatedSeries TruncatedSeries::from(const ZMonomial& m, std::size_t order) {
  if (m.degree < 0) throw std::invalid_argument("TruncatedSeries: negative z-degree");
  return monomial(m.coeff, static_cast<std::size_t>(m.degree), order);
}

std::optional<std::size_t> TruncatedSeries::z_order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return std::nullopt;
}

bool TruncatedSeries::vanishes_below(std::size_t zmod) const {
  if (zmod > order()) throw std::invalid_argument("TruncatedSeries: zmod exceeds truncation order");
  return std::all_of(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(zmod),
                     [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries TruncatedSeries::truncated(std::size_t new_order) const {
  if (new_order > order()) throw std::invalid_argument("TruncatedSeries: cannot raise truncation order");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(new_order)),
                         new_order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(order(), rhs.order()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t n = std::min(lhs.order(), rhs.order());
  TruncatedSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (!first) os << " + ";
  os << "O(z^" << coeffs_.size() << ")";
  return os.str();
}

void WLaurent::add_term(int exponent, const TruncatedSeries& coeff) {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(exponent, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

std::optional<TruncatedSeries> WLaurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> WLaurent::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> WLaurent::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

WLaurent WLaurent::shifted(int shift) const {
  WLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

WLaurent WLaurent::truncated_below(int min_exponent) const {
  WLaurent out;
  out.terms_.insert(terms_.lower_bound(min_exponent), terms_.end());
  return out;
}

WLaurent& WLaurent::operator+=(const WLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

WLaurent& WLaurent::operator-=(const WLaurent& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

WLaurent operator*(const WLaurent& lhs, const WLaurent& rhs) {
  WLaurent out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) out.add_term(el + er, cl * cr);
  }
  return out;
}

WLaurent WLaurent::operator-() const {
  WLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

std::string WLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")*w^" << it->first;
  }
  return os.str();
}

ZMonomial sqrt_coeff(int j) {
  if (j < 0) throw std::invalid_argument("sqrt_coeff: j must be nonnegative");
  if (j == 0) return {Rational(1), 0};
  Rational c = -pow2(1 - 2L * j) * Rational(binomial(2L * j - 2, j - 1), BigInt(j));
  return {c, j};
}

WLaurent sqrt_expansion(int max_j, std::size_t order) {
  WLaurent out;
  for (int j = 0; j <= max_j; ++j) out.add_term(-j, TruncatedSeries::from(sqrt_coeff(j), order));
  return out;
}

bool wlaurent_nonneg_check(const WLaurent& p, std::size_t zmod) {
  for (const auto& [e, c] : p.terms()) {
    if (zmod > c.order()) throw std::invalid_argument("wlaurent_nonneg_check: zmod exceeds coefficient truncation order");
  }
  for (const auto& [e, c] : p.terms()) {
    if (e >= 0) break;  // terms_ is ordered by exponent
    if (!c.vanishes_below(zmod)) return false;
  }
  return true;
}

}  // namespace thetagw
