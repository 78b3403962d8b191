#pragma once

#include <span>
#include <vector>

#include "skewcert/exact/projective.hpp"
#include "skewcert/exact/rational.hpp"
#include "skewcert/monod/pp_element.hpp"

namespace skewcert::monod {

/// The affine Mobius map sending s0 -> t0 and s1 -> t1, built as the product
/// (t0 t1; 1 1)(s0 s1; 1 1)^-1. Requires s0 < s1 and t0 < t1.
Mobius two_transitive(const Rational& s0, const Rational& s1, const Rational& t0, const Rational& t1);

/// x -> x + (t - s).
Mobius fix_infty_map(const Rational& s, const Rational& t);

/// An element sending xs[i] -> ys[i]: translations outside [xs.front(), xs.back()]
/// and two-point interpolants between consecutive xs.
PPElement strongly_transitive_H(std::span<const Rational> xs, std::span<const Rational> ys);

/// Identity off [u, v]; inside, the Mobius map with fixed points u and v and
/// multiplier lambda > 0 at u. Its pole lies outside [u, v].
PPElement hyperbolic_bump(const Rational& u, const Rational& v, const Rational& lambda);

struct TailAffine {
  Mobius m;    // last piece, fixes infinity
  Rational a;  // h agrees with m on [a, inf]
};
TailAffine tail_affine(const PPElement& h);

/// x -> x + N with the least N >= 0 putting every affine point of F in [a, inf).
PPElement attractive_translation(std::span<const ProjPoint> F, const Rational& a);
BigInt attractive_shift(std::span<const ProjPoint> F, const Rational& a);

}  // namespace skewcert::monod
