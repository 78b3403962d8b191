#include "skewcert/folner/actions.hpp"

#include "skewcert/monod/constructors.hpp"
#include "skewcert/thompson/conjugation.hpp"

namespace skewcert::folner {

NamedAction<IntShift> z_shift_action() { return {"z-shift", {{'T', IntShift{1}}}, std::int64_t{0}}; }

NamedAction<thompson::PLMapUnit> thompson_unit_action() {
  const auto [a, b] = thompson::generators();
  return {"thompson-unit", {{'A', a}, {'B', b}}, Dyadic(BigInt(1), 1)};
}

NamedAction<thompson::PLMapLine> thompson_line_action() {
  const auto [a, b] = thompson::generators();
  return {"thompson-line", {{'A', thompson::phi(a)}, {'B', thompson::phi(b)}}, Dyadic(0)};
}

NamedAction<monod::PPElement> monod_action() {
  return {"monod",
          {{'T', monod::PPElement::affine(Rational(1), Rational(1))},
           {'D', monod::PPElement::affine(Rational(2), Rational(0))},
           {'P', monod::hyperbolic_bump(Rational(0), Rational(1), Rational(2))}},
          ProjPoint(0)};
}

NamedAction<Lamplighter> lamplighter_action() {
  return {"lamplighter", {{'T', Lamplighter{0, 1}}, {'L', Lamplighter{LampWindow::single(0).bits, 0}}}, LampWindow{}};
}

}  // namespace skewcert::folner
