#include "skewcert/monod/constructors.hpp"

#include <array>
#include <stdexcept>

namespace skewcert::monod {

namespace {

using Mat = std::array<Rational, 4>;  // row major

Mat mat_mul(const Mat& x, const Mat& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}

Mat mat_inv(const Mat& x) {
  const Rational det = x[0] * x[3] - x[1] * x[2];
  return {x[3] / det, -x[1] / det, -x[2] / det, x[0] / det};
}

Mobius to_mobius(const Mat& x) {
  BigInt l = 1;
  for (const auto& e : x) l = lcm(l, e.den());
  return Mobius((x[0] * Rational(l)).num(), (x[1] * Rational(l)).num(), (x[2] * Rational(l)).num(),
                (x[3] * Rational(l)).num());
}

}  // namespace

Mobius two_transitive(const Rational& s0, const Rational& s1, const Rational& t0, const Rational& t1) {
  if (!(s0 < s1) || !(t0 < t1)) throw std::invalid_argument("two_transitive requires s0 < s1 and t0 < t1");
  const Mat target{t0, t1, Rational(1), Rational(1)};
  const Mat source{s0, s1, Rational(1), Rational(1)};
  return to_mobius(mat_mul(target, mat_inv(source)));
}

Mobius fix_infty_map(const Rational& s, const Rational& t) {
  return to_mobius({Rational(1), t - s, Rational(0), Rational(1)});
}

PPElement strongly_transitive_H(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.empty() || xs.size() != ys.size()) {
    throw std::invalid_argument("strongly_transitive_H needs two non-empty lists of equal length");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i - 1] < xs[i]) || !(ys[i - 1] < ys[i])) {
      throw std::invalid_argument("strongly_transitive_H needs strictly increasing lists");
    }
  }
  std::vector<ProjPoint> cuts(xs.begin(), xs.end());
  std::vector<Mobius> pieces{fix_infty_map(xs.front(), ys.front())};
  for (std::size_t i = 1; i < xs.size(); ++i) pieces.push_back(two_transitive(xs[i - 1], xs[i], ys[i - 1], ys[i]));
  pieces.push_back(fix_infty_map(xs.back(), ys.back()));
  return PPElement::from_parts(std::move(cuts), std::move(pieces));
}

PPElement hyperbolic_bump(const Rational& u, const Rational& v, const Rational& lambda) {
  if (!(u < v) || lambda.sign() <= 0) throw std::invalid_argument("hyperbolic_bump requires u < v and lambda > 0");
  // P diag(lambda, 1) P^-1 with P = (u v; 1 1).
  const Mat P{u, v, Rational(1), Rational(1)};
  const Mat D{lambda, Rational(0), Rational(0), Rational(1)};
  return PPElement::from_parts({ProjPoint(u), ProjPoint(v)},
                               {Mobius::identity(), to_mobius(mat_mul(mat_mul(P, D), mat_inv(P))), Mobius::identity()});
}

TailAffine tail_affine(const PPElement& h) {
  if (h.cuts().empty()) return {h.pieces().back(), Rational(0)};
  return {h.pieces().back(), h.cuts().back().affine()};
}

BigInt attractive_shift(std::span<const ProjPoint> F, const Rational& a) {
  BigInt n = 0;
  for (const auto& x : F) {
    if (x.is_infinity()) continue;
    const BigInt need = (a - x.affine()).ceil();
    if (need > n) n = need;
  }
  return n;
}

PPElement attractive_translation(std::span<const ProjPoint> F, const Rational& a) {
  return PPElement::from_parts({}, {Mobius(BigInt(1), attractive_shift(F, a), BigInt(0), BigInt(1))});
}

}  // namespace skewcert::monod
