#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

namespace skewcert {

/// Group law and left action for a group element type G. Specialized next to
/// each concrete group (PL maps, piecewise-projective maps, integer shifts,
/// semidirect products). compose(g, h) acts as h first, then g.
template <class G>
struct GroupTraits;

template <class G>
concept GroupAction = requires(const G& g, const typename GroupTraits<G>::point_type& x) {
  typename GroupTraits<G>::point_type;
  { GroupTraits<G>::identity() } -> std::convertible_to<G>;
  { GroupTraits<G>::compose(g, g) } -> std::convertible_to<G>;
  { GroupTraits<G>::inverse(g) } -> std::convertible_to<G>;
  { GroupTraits<G>::apply(g, x) } -> std::convertible_to<typename GroupTraits<G>::point_type>;
  { g == g } -> std::convertible_to<bool>;
};

/// Translation of Z by an integer amount.
struct IntShift {
  std::int64_t amount = 0;

  friend bool operator==(const IntShift&, const IntShift&) = default;
  friend auto operator<=>(const IntShift&, const IntShift&) = default;
};

template <>
struct GroupTraits<IntShift> {
  using point_type = std::int64_t;
  static IntShift identity() { return {}; }
  static IntShift compose(const IntShift& g, const IntShift& h) { return {g.amount + h.amount}; }
  static IntShift inverse(const IntShift& g) { return {-g.amount}; }
  static std::int64_t apply(const IntShift& g, std::int64_t x) { return x + g.amount; }
};

}  // namespace skewcert
