#pragma once

#include <cstdint>
#include <vector>

#include "skewcert/folner/certificates.hpp"
#include "skewcert/monod/pp_element.hpp"
#include "skewcert/thompson/pl_map.hpp"

namespace skewcert::folner {

struct ThompsonChoice {
  std::int64_t N = 0;  // t is translation by -N
  SimulationWitness<thompson::PLMapLine> witness;
};

/// Simulates each g by its left-tail translation: t pushes S.t.P left of every
/// tail bound. S holds integer translation amounts.
ThompsonChoice thompson_choose_t(const std::vector<thompson::PLMapLine>& E, const std::vector<std::int64_t>& S,
                                 const std::vector<Dyadic>& P);

struct MonodChoice {
  Rational a;  // every point of S.t.P lies in [a, inf]
  SimulationWitness<monod::PPElement> witness;
};

/// Simulates each g by its affine tail: t is the attractive translation taking
/// P into [max over s, g of s^-1(a_g), inf).
MonodChoice monod_choose_t(const std::vector<monod::PPElement>& E, const std::vector<monod::PPElement>& S,
                           const std::vector<ProjPoint>& P);

}  // namespace skewcert::folner
