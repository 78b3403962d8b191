#pragma once

#include <string_view>
#include <type_traits>

#include "skewcert/folner/action.hpp"
#include "skewcert/monod/pp_element.hpp"
#include "skewcert/schema.hpp"
#include "skewcert/thompson/pl_map.hpp"
#include "skewcert/wreath/lamplighter.hpp"
#include "skewcert/wreath/semidirect.hpp"

namespace skewcert::folner {

/// Z acting on itself; T = +1. Origin 0.
NamedAction<IntShift> z_shift_action();
/// F on [0,1] with generators A, B. Origin 1/2.
NamedAction<thompson::PLMapUnit> thompson_unit_action();
/// F on R (the conjugated picture) with generators A, B. Origin 0.
NamedAction<thompson::PLMapLine> thompson_line_action();
/// Piecewise-projective maps: T = x+1, D = 2x, P = a hyperbolic bump on [0,1]. Origin 0.
NamedAction<monod::PPElement> monod_action();
/// Packed lamplighter: T = shift by +1, L = toggle the lamp at 0.
NamedAction<Lamplighter> lamplighter_action();

/// H^(X) x| G over a base action: base generators act by tau, L toggles the
/// Z/2Z lamp at the base origin. Named "wreath:<base>".
template <GroupAction G>
NamedAction<SemidirectElem<G>> wreath_action(const NamedAction<G>& base) {
  using E = SemidirectElem<G>;
  using P = typename GroupTraits<G>::point_type;
  std::vector<std::pair<char, E>> gens;
  for (char c : base.letters()) {
    if (c == 'L') throw std::invalid_argument("base action already uses the lamp letter L");
    gens.emplace_back(c, E{Config<P>(LampGroup::Z2), base.generator(c)});
  }
  gens.emplace_back('L', lamp_toggle<G>(base.origin(), LampGroup::Z2));
  return NamedAction<E>("wreath:" + base.name(), std::move(gens), Config<P>(LampGroup::Z2));
}

/// Calls f with the named action, whose element type depends on the name.
template <class F>
decltype(auto) with_action(std::string_view name, F&& f) {
  if (name == "z-shift") return f(z_shift_action());
  if (name == "thompson-unit") return f(thompson_unit_action());
  if (name == "thompson-line") return f(thompson_line_action());
  if (name == "monod") return f(monod_action());
  if (name == "lamplighter") return f(lamplighter_action());
  if (name == "wreath:z-shift") return f(wreath_action(z_shift_action()));
  if (name == "wreath:thompson-unit") return f(wreath_action(thompson_unit_action()));
  if (name == "wreath:thompson-line") return f(wreath_action(thompson_line_action()));
  if (name == "wreath:monod") return f(wreath_action(monod_action()));
  throw SchemaError("field 'action': unknown action '" + std::string(name) + "'");
}

/// Calls f with std::type_identity<G> for a named group.
template <class F>
decltype(auto) with_group(std::string_view name, F&& f) {
  if (name == "z-shift") return f(std::type_identity<IntShift>{});
  if (name == "thompson-unit") return f(std::type_identity<thompson::PLMapUnit>{});
  if (name == "thompson-line") return f(std::type_identity<thompson::PLMapLine>{});
  if (name == "monod") return f(std::type_identity<monod::PPElement>{});
  throw SchemaError("field 'group': unknown group '" + std::string(name) + "'");
}

}  // namespace skewcert::folner
