#pragma once

#include <cstdint>

#include "skewcert/thompson/pl_map.hpp"

namespace skewcert::thompson {

/// t_n = 1 - 2^-(n+1) for n >= 0 and 2^(n-1) for n < 0.
Dyadic kappa_knot(long n);

/// The PL order isomorphism (0,1) -> R sending t_n to n, affine on each
/// [t_n, t_{n+1}]. Throws std::domain_error outside (0,1).
Dyadic kappa(const Dyadic& x);
Dyadic kappa_inv(const Dyadic& y);

/// phi(g) = kappa o g o kappa^-1, from the unit picture to the line picture.
PLMapLine phi(const PLMapUnit& g);
PLMapUnit phi_inv(const PLMapLine& h);

/// Evaluates a word over {A, B, a, b} directly in the line picture.
PLMapLine line_word(std::string_view word);

/// The left tail of h: h(x) = x + shift for every x <= bound.
struct TailTranslation {
  std::int64_t shift = 0;
  Dyadic bound;
};
TailTranslation tail_translation(const PLMapLine& h);

}  // namespace skewcert::thompson
