#pragma once

#include <vector>

#include "random.hpp"
#include "skewcert/monod/constructors.hpp"

namespace skewcert::testing {

inline std::vector<Rational> increasing_rationals(Rng& rng, std::size_t n) {
  return increasing_sample<Rational>(rng, n, [](Rng& r) { return random_rational(r, 20, 6); });
}

/// A random element mixing interpolation and genuinely projective pieces.
inline monod::PPElement random_pp(Rng& rng) {
  const auto n = static_cast<std::size_t>(uniform(rng, 1, 4));
  const auto xs = increasing_rationals(rng, n);
  const auto ys = increasing_rationals(rng, n);
  auto h = monod::strongly_transitive_H(xs, ys);
  const auto bumps = uniform(rng, 0, 2);
  for (std::int64_t i = 0; i < bumps; ++i) {
    const auto uv = increasing_rationals(rng, 2);
    const Rational lambda(BigInt(uniform(rng, 1, 7)), BigInt(uniform(rng, 1, 7)));
    h = monod::pp_compose(monod::hyperbolic_bump(uv[0], uv[1], lambda), h);
  }
  return h;
}

}  // namespace skewcert::testing
