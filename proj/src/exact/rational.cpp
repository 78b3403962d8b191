#include "skewcert/exact/rational.hpp"

#include <stdexcept>

namespace skewcert {

BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }
Rational operator+(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ + y.value_)); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ - y.value_)); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(mpq_class(x.value_ * y.value_)); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.sign() == 0) throw std::domain_error("rational division by zero");
  return Rational(mpq_class(x.value_ / y.value_));
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
}

}  // namespace skewcert
