#pragma once

#include <string>

#include "skewcert/exact/bigint.hpp"
#include "skewcert/exact/rational.hpp"

namespace skewcert {

/// A rational point [p:q] of the projective line. Canonical: gcd(|p|,|q|) = 1
/// and q > 0, except infinity which is exactly [1:0].
class ProjPoint {
 public:
  ProjPoint() : p_(0), q_(1) {}
  ProjPoint(BigInt p, BigInt q);
  ProjPoint(const Rational& x) : p_(x.num()), q_(x.den()) {}  // NOLINT(google-explicit-constructor)
  ProjPoint(long x) : p_(x), q_(1) {}  // NOLINT(google-explicit-constructor)

  static ProjPoint infinity() { return ProjPoint(BigInt(1), BigInt(0)); }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }
  /// p/q; throws std::domain_error at infinity.
  Rational affine() const;

  friend bool operator==(const ProjPoint& x, const ProjPoint& y) {
    return x.p_ == y.p_ && x.q_ == y.q_;
  }
  /// Storage order (affine points by value, infinity last); used for containers.
  friend bool operator<(const ProjPoint& x, const ProjPoint& y);

  /// "p/q", or "inf".
  std::string str() const;
  static ProjPoint parse(std::string_view text);

 private:
  BigInt p_;
  BigInt q_;
};

/// The affine order [x:1] <= [y:1] iff x <= y. Throws std::domain_error if
/// either argument is infinity.
bool proj_leq(const ProjPoint& x, const ProjPoint& y);
bool proj_less(const ProjPoint& x, const ProjPoint& y);

/// A primitive integer 2x2 matrix with positive determinant acting on the
/// projective line. Canonical: first nonzero of (a, b, c, d) is positive.
class Mobius {
 public:
  Mobius() : a_(1), b_(0), c_(0), d_(1) {}
  Mobius(BigInt a, BigInt b, BigInt c, BigInt d);

  static Mobius identity() { return {}; }
  /// The affine map x -> slope * x + offset, slope > 0.
  static Mobius affine(const Rational& slope, const Rational& offset);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }
  BigInt det() const { return a_ * d_ - b_ * c_; }
  bool fixes_infinity() const { return c_ == 0; }

  ProjPoint apply(const ProjPoint& x) const;
  /// Sign of c*x + d at the point x (the denominator of the image), in {-1, 0, 1}.
  int pole_sign(const ProjPoint& x) const;

  friend bool operator==(const Mobius& x, const Mobius& y) = default;

  std::string str() const;

 private:
  BigInt a_, b_, c_, d_;
};

ProjPoint proj_apply(const Mobius& m, const ProjPoint& x);
/// Matrix product m1 * m2 (m2 acts first).
Mobius mobius_compose(const Mobius& m1, const Mobius& m2);
Mobius mobius_inverse(const Mobius& m);

inline Mobius operator*(const Mobius& m1, const Mobius& m2) { return mobius_compose(m1, m2); }

}  // namespace skewcert
