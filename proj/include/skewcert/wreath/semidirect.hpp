#pragma once

#include <stdexcept>

#include "skewcert/action.hpp"
#include "skewcert/wreath/config.hpp"

namespace skewcert {

/// An element (f, g) of H^(X) x| G.
template <GroupAction G>
struct SemidirectElem {
  using point_type = typename GroupTraits<G>::point_type;

  Config<point_type> config;
  G g;

  friend bool operator==(const SemidirectElem& a, const SemidirectElem& b) {
    return a.config == b.config && a.g == b.g;
  }
};

namespace detail {

// The empty configuration is the zero of either lamp group, so it adopts the
// lamp group of the other operand.
template <class P>
Config<P> lamp_sum(const Config<P>& f, const Config<P>& g) {
  if (f.empty()) return g;
  if (g.empty()) return f;
  if (f.lamps() != g.lamps()) throw std::invalid_argument("lamp group mismatch");
  return f + g;
}

}  // namespace detail

/// (f, g)(f', g') = (f + g.f', gg').
template <GroupAction G>
SemidirectElem<G> semidirect_mul(const SemidirectElem<G>& a, const SemidirectElem<G>& b) {
  return {detail::lamp_sum(a.config, tau_apply(a.g, b.config)), GroupTraits<G>::compose(a.g, b.g)};
}

/// (f, g)^-1 = (-(g^-1).f, g^-1).
template <GroupAction G>
SemidirectElem<G> semidirect_inv(const SemidirectElem<G>& a) {
  G gi = GroupTraits<G>::inverse(a.g);
  return {-tau_apply(gi, a.config), std::move(gi)};
}

template <GroupAction G>
SemidirectElem<G> semidirect_identity(LampGroup lamps) {
  return {Config<typename GroupTraits<G>::point_type>(lamps), GroupTraits<G>::identity()};
}

/// ((f, g), f') -> f + g.f'.
template <GroupAction G>
Config<typename GroupTraits<G>::point_type> wreath_act(const SemidirectElem<G>& e,
                                                      const Config<typename GroupTraits<G>::point_type>& f) {
  return detail::lamp_sum(e.config, tau_apply(e.g, f));
}

/// The lamp toggle (delta_x, id).
template <GroupAction G>
SemidirectElem<G> lamp_toggle(const typename GroupTraits<G>::point_type& x, LampGroup lamps) {
  SemidirectElem<G> e = semidirect_identity<G>(lamps);
  e.config.add(x, 1);
  return e;
}

template <GroupAction G>
struct GroupTraits<SemidirectElem<G>> {
  using point_type = Config<typename GroupTraits<G>::point_type>;
  // Identity in the Z lamp group; composition with a Z2 element keeps Z2.
  static SemidirectElem<G> identity() { return semidirect_identity<G>(LampGroup::Z); }
  static SemidirectElem<G> compose(const SemidirectElem<G>& a, const SemidirectElem<G>& b) {
    if (a.config.empty() && a.g == GroupTraits<G>::identity()) return b;
    if (b.config.empty() && b.g == GroupTraits<G>::identity()) return a;
    return semidirect_mul(a, b);
  }
  static SemidirectElem<G> inverse(const SemidirectElem<G>& a) { return semidirect_inv(a); }
  static point_type apply(const SemidirectElem<G>& e, const point_type& f) { return wreath_act(e, f); }
};

}  // namespace skewcert
