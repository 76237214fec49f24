#include "thetagw/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace thetagw {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator) : Rational(BigInt(numerator), BigInt(denominator)) {}

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  if (!is_decimal_integer(num_text)) throw std::invalid_argument("Rational::parse: malformed numerator in '" + std::string(text) + "'");
  BigInt num(std::string(num_text), 10);
  if (slash == std::string_view::npos) return Rational(num);
  const std::string_view den_text = text.substr(slash + 1);
  if (!is_decimal_integer(den_text) || den_text.front() == '-') {
    throw std::invalid_argument("Rational::parse: malformed denominator in '" + std::string(text) + "'");
  }
  BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

std::string Rational::to_string() const {
  std::string out = value_.get_num().get_str();
  if (value_.get_den() != 1) {
    out += '/';
    out += value_.get_den().get_str();
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational sign_power(long exponent) { return (exponent % 2 == 0) ? Rational(1) : Rational(-1); }

Rational pow2(long exponent) { return Rational(2).pow(exponent); }

}  // namespace thetagw
