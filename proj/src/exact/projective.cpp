#include "skewcert/exact/projective.hpp"

#include <stdexcept>

namespace skewcert {

ProjPoint::ProjPoint(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {
  if (p_ == 0 && q_ == 0) throw std::invalid_argument("projective point [0:0]");
  const BigInt g = gcd(p_, q_);
  p_ /= g;
  q_ /= g;
  if (q_ < 0 || (q_ == 0 && p_ < 0)) {
    p_ = -p_;
    q_ = -q_;
  }
}

Rational ProjPoint::affine() const {
  if (is_infinity()) throw std::domain_error("infinity has no affine coordinate");
  return Rational(p_, q_);
}

bool operator<(const ProjPoint& x, const ProjPoint& y) {
  if (x.is_infinity() || y.is_infinity()) return !x.is_infinity() && y.is_infinity();
  return x.p_ * y.q_ < y.p_ * x.q_;
}

std::string ProjPoint::str() const {
  if (is_infinity()) return "inf";
  if (q_ == 1) return p_.get_str();
  return p_.get_str() + "/" + q_.get_str();
}

ProjPoint ProjPoint::parse(std::string_view text) {
  if (text == "inf" || text == "infinity") return infinity();
  return ProjPoint(Rational::parse(text));
}

bool proj_leq(const ProjPoint& x, const ProjPoint& y) {
  if (x.is_infinity() || y.is_infinity()) throw std::domain_error("affine order is undefined at infinity");
  return x.p() * y.q() <= y.p() * x.q();
}

bool proj_less(const ProjPoint& x, const ProjPoint& y) { return !proj_leq(y, x); }

Mobius::Mobius(BigInt a, BigInt b, BigInt c, BigInt d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det() <= 0) throw std::invalid_argument("projective matrix must have positive determinant");
  const BigInt g = gcd(gcd(a_, b_), gcd(c_, d_));
  a_ /= g;
  b_ /= g;
  c_ /= g;
  d_ /= g;
  const BigInt& lead = a_ != 0 ? a_ : (b_ != 0 ? b_ : (c_ != 0 ? c_ : d_));
  if (lead < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

Mobius Mobius::affine(const Rational& slope, const Rational& offset) {
  if (slope.sign() <= 0) throw std::invalid_argument("affine map needs positive slope");
  BigInt l;
  mpz_lcm(l.get_mpz_t(), slope.den().get_mpz_t(), offset.den().get_mpz_t());
  return Mobius(slope.num() * (l / slope.den()), offset.num() * (l / offset.den()), BigInt(0), l);
}

ProjPoint Mobius::apply(const ProjPoint& x) const {
  return ProjPoint(a_ * x.p() + b_ * x.q(), c_ * x.p() + d_ * x.q());
}

int Mobius::pole_sign(const ProjPoint& x) const { return sgn(BigInt(c_ * x.p() + d_ * x.q())); }

std::string Mobius::str() const {
  return "[[" + a_.get_str() + "," + b_.get_str() + "],[" + c_.get_str() + "," + d_.get_str() + "]]";
}

ProjPoint proj_apply(const Mobius& m, const ProjPoint& x) { return m.apply(x); }

Mobius mobius_compose(const Mobius& m1, const Mobius& m2) {
  return Mobius(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

Mobius mobius_inverse(const Mobius& m) { return Mobius(m.d(), -m.b(), -m.c(), m.a()); }

}  // namespace skewcert
