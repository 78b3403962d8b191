#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "skewcert/action.hpp"
#include "skewcert/wreath/config.hpp"

namespace skewcert {

/// A Z/2Z configuration on Z supported in [-32, 31]; bit i is position i - 32.
struct LampWindow {
  static constexpr int kOffset = 32;
  static constexpr std::int64_t kMin = -32;
  static constexpr std::int64_t kMax = 31;

  std::uint64_t bits = 0;

  friend bool operator==(const LampWindow&, const LampWindow&) = default;
  friend auto operator<=>(const LampWindow&, const LampWindow&) = default;

  static LampWindow single(std::int64_t x) {
    if (x < kMin || x > kMax) throw std::out_of_range("lamp position outside the packed window");
    return {std::uint64_t{1} << (x + kOffset)};
  }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits)); }
};

/// Moves every lit lamp by n; throws std::out_of_range if one leaves the window.
inline std::uint64_t shift_lamps(std::uint64_t bits, std::int64_t n) {
  if (n == 0 || bits == 0) return bits;
  if (n >= 64 || n <= -64) throw std::out_of_range("lamp shifted outside the packed window");
  if (n > 0) {
    if (bits >> (64 - n)) throw std::out_of_range("lamp shifted outside the packed window");
    return bits << n;
  }
  if (bits & ((std::uint64_t{1} << -n) - 1)) throw std::out_of_range("lamp shifted outside the packed window");
  return bits >> -n;
}

/// The lamplighter group (Z/2Z)^(Z) x| Z with lamps kept in the packed window.
struct Lamplighter {
  std::uint64_t lamps = 0;
  std::int64_t shift = 0;

  friend bool operator==(const Lamplighter&, const Lamplighter&) = default;
};

template <>
struct GroupTraits<Lamplighter> {
  using point_type = LampWindow;
  static Lamplighter identity() { return {}; }
  static Lamplighter compose(const Lamplighter& a, const Lamplighter& b) {
    return {a.lamps ^ shift_lamps(b.lamps, a.shift), a.shift + b.shift};
  }
  static Lamplighter inverse(const Lamplighter& a) { return {shift_lamps(a.lamps, -a.shift), -a.shift}; }
  static LampWindow apply(const Lamplighter& a, const LampWindow& x) {
    return {a.lamps ^ shift_lamps(x.bits, a.shift)};
  }
};

inline Config<std::int64_t> to_config(const LampWindow& w) {
  Config<std::int64_t> f(LampGroup::Z2);
  for (std::uint64_t b = w.bits; b != 0; b &= b - 1) f.add(std::countr_zero(b) - LampWindow::kOffset, 1);
  return f;
}

inline LampWindow to_window(const Config<std::int64_t>& f) {
  if (!f.empty() && f.lamps() != LampGroup::Z2) throw std::invalid_argument("packed lamps require Z2 values");
  LampWindow w;
  for (const auto& [x, v] : f.entries()) w.bits |= LampWindow::single(x).bits;
  return w;
}

}  // namespace skewcert
