#include "skewcert/exact/dyadic.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace skewcert {
namespace {

BigInt shl(const BigInt& x, unsigned long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), x.get_mpz_t(), bits);
  return r;
}

unsigned long trailing_zeros(const BigInt& x) { return mpz_scan1(x.get_mpz_t(), 0); }

}  // namespace

Dyadic::Dyadic(BigInt num, std::uint32_t exp) : num_(std::move(num)), exp_(exp) { normalize(); }

Dyadic Dyadic::pow2(int k) {
  if (k >= 0) return Dyadic(shl(BigInt(1), static_cast<unsigned long>(k)), 0);
  return Dyadic(BigInt(1), static_cast<std::uint32_t>(-k));
}

void Dyadic::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto shift = std::min<unsigned long>(trailing_zeros(num_), exp_);
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= static_cast<std::uint32_t>(shift);
  }
}

Dyadic Dyadic::operator-() const {
  Dyadic r = *this;
  r.num_ = -r.num_;
  return r;
}

Dyadic operator+(const Dyadic& x, const Dyadic& y) {
  const auto e = std::max(x.exp_, y.exp_);
  return Dyadic(shl(x.num_, e - x.exp_) + shl(y.num_, e - y.exp_), e);
}

Dyadic operator-(const Dyadic& x, const Dyadic& y) { return x + (-y); }

Dyadic operator*(const Dyadic& x, const Dyadic& y) {
  const auto e = static_cast<unsigned long>(x.exp_) + y.exp_;
  if (e > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("dyadic exponent overflow");
  return Dyadic(BigInt(x.num_ * y.num_), static_cast<std::uint32_t>(e));
}

Dyadic Dyadic::mul_pow2(long k) const {
  if (k >= 0) {
    const auto uk = static_cast<unsigned long>(k);
    if (exp_ >= uk) return Dyadic(num_, static_cast<std::uint32_t>(exp_ - uk));
    return Dyadic(shl(num_, uk - exp_), 0);
  }
  const auto e = static_cast<unsigned long>(exp_) + static_cast<unsigned long>(-k);
  if (e > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("dyadic exponent overflow");
  return Dyadic(num_, static_cast<std::uint32_t>(e));
}

std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y) {
  if (x.exp_ == y.exp_) return cmp(x.num_, y.num_) <=> 0;
  const auto e = std::max(x.exp_, y.exp_);
  return cmp(shl(x.num_, e - x.exp_), shl(y.num_, e - y.exp_)) <=> 0;
}

BigInt Dyadic::floor() const {
  BigInt r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
  return r;
}

BigInt Dyadic::ceil() const {
  BigInt r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), num_.get_mpz_t(), exp_);
  return r;
}

long Dyadic::floor_log2() const {
  if (sign() <= 0) throw std::domain_error("floor_log2 of non-positive dyadic");
  return static_cast<long>(mpz_sizeinbase(num_.get_mpz_t(), 2)) - 1 - static_cast<long>(exp_);
}

Rational Dyadic::to_rational() const { return Rational(num_, shl(BigInt(1), exp_)); }

std::optional<Dyadic> Dyadic::from_rational(const Rational& value) {
  const BigInt den = value.den();
  const auto tz = trailing_zeros(den);
  if (shl(BigInt(1), tz) != den) return std::nullopt;
  if (tz > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return Dyadic(value.num(), static_cast<std::uint32_t>(tz));
}

std::string Dyadic::str() const {
  if (exp_ == 0) return num_.get_str();
  return num_.get_str() + "/" + shl(BigInt(1), exp_).get_str();
}

Dyadic Dyadic::parse(std::string_view text) {
  const auto caret = text.find("/2^");
  if (caret != std::string_view::npos) {
    const BigInt e = parse_bigint(text.substr(caret + 3));
    if (e < 0 || e > std::numeric_limits<std::uint32_t>::max()) {
      throw std::invalid_argument("bad dyadic exponent: '" + std::string(text) + "'");
    }
    return Dyadic(parse_bigint(text.substr(0, caret)), static_cast<std::uint32_t>(e.get_ui()));
  }
  auto d = from_rational(Rational::parse(text));
  if (!d) throw std::invalid_argument("not a dyadic rational: '" + std::string(text) + "'");
  return *d;
}

std::optional<long> log2_ratio(const Dyadic& num, const Dyadic& den) {
  if (num.sign() == 0 || den.sign() == 0 || num.sign() != den.sign()) return std::nullopt;
  const auto ta = trailing_zeros(num.num());
  const auto tb = trailing_zeros(den.num());
  BigInt a, b;
  mpz_tdiv_q_2exp(a.get_mpz_t(), num.num().get_mpz_t(), ta);
  mpz_tdiv_q_2exp(b.get_mpz_t(), den.num().get_mpz_t(), tb);
  if (a != b) return std::nullopt;
  return static_cast<long>(ta) - static_cast<long>(tb) + static_cast<long>(den.exp()) -
         static_cast<long>(num.exp());
}

}  // namespace skewcert
