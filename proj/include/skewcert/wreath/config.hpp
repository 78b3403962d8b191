#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "skewcert/action.hpp"

namespace skewcert {

enum class LampGroup { Z, Z2 };

inline const char* lamp_group_name(LampGroup g) { return g == LampGroup::Z ? "Z" : "Z2"; }

/// A finitely supported function X -> H for H in {Z, Z/2Z}. Zero values are
/// never stored; Z/2Z values are always 1.
template <class Point>
class Config {
 public:
  using point_type = Point;
  using map_type = std::map<Point, std::int64_t>;

  explicit Config(LampGroup lamps = LampGroup::Z) : lamps_(lamps) {}

  LampGroup lamps() const { return lamps_; }
  const map_type& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::int64_t at(const Point& x) const {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
  }

  /// Adds `value` at x in the lamp group.
  void add(const Point& x, std::int64_t value) {
    if (lamps_ == LampGroup::Z2) value = ((value % 2) + 2) % 2;
    if (value == 0) return;
    auto [it, inserted] = entries_.try_emplace(x, value);
    if (inserted) return;
    it->second = lamps_ == LampGroup::Z2 ? (it->second + value) % 2 : it->second + value;
    if (it->second == 0) entries_.erase(it);
  }

  Config operator-() const {
    Config r(lamps_);
    for (const auto& [x, v] : entries_) r.entries_.emplace(x, lamps_ == LampGroup::Z2 ? v : -v);
    return r;
  }

  friend Config operator+(const Config& f, const Config& g) {
    if (f.lamps_ != g.lamps_) throw std::invalid_argument("lamp group mismatch");
    Config r = f;
    for (const auto& [x, v] : g.entries_) r.add(x, v);
    return r;
  }

  // The empty configuration is the same zero in both lamp groups.
  friend bool operator==(const Config& f, const Config& g) {
    if (f.empty() || g.empty()) return f.empty() && g.empty();
    return f.lamps_ == g.lamps_ && f.entries_ == g.entries_;
  }

  friend bool operator<(const Config& f, const Config& g) {
    if (f.empty() || g.empty()) return f.empty() && !g.empty();
    if (f.lamps_ != g.lamps_) return f.lamps_ < g.lamps_;
    return std::lexicographical_compare(f.entries_.begin(), f.entries_.end(), g.entries_.begin(),
                                        g.entries_.end());
  }

  /// Inserts an entry produced by a bijection of X; the point must be new.
  void emplace_unique(Point x, std::int64_t value) {
    if (value == 0) return;
    if (!entries_.emplace(std::move(x), value).second) {
      throw std::logic_error("configuration point mapped twice");
    }
  }

 private:
  LampGroup lamps_;
  map_type entries_;
};

/// The shift action (g.f)(x) = f(g^-1 x): support moves forward under g.
template <GroupAction G>
Config<typename GroupTraits<G>::point_type> tau_apply(const G& g,
                                                     const Config<typename GroupTraits<G>::point_type>& f) {
  Config<typename GroupTraits<G>::point_type> r(f.lamps());
  for (const auto& [x, v] : f.entries()) r.emplace_unique(GroupTraits<G>::apply(g, x), v);
  return r;
}

}  // namespace skewcert
