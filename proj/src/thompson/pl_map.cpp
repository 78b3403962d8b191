#include "skewcert/thompson/pl_map.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcert::thompson {
namespace {

std::optional<std::vector<long>> piece_slopes(const std::vector<Breakpoint>& points) {
  std::vector<long> slopes;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    auto s = log2_ratio(points[i + 1].y - points[i].y, points[i + 1].x - points[i].x);
    if (!s) return std::nullopt;
    slopes.push_back(*s);
  }
  return slopes;
}

std::optional<std::string> check_monotone(const std::vector<Breakpoint>& points) {
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i].x < points[i + 1].x)) {
      return "x-coordinates not strictly increasing at breakpoint " + std::to_string(i + 1);
    }
    if (!(points[i].y < points[i + 1].y)) {
      return "y-coordinates not strictly increasing at breakpoint " + std::to_string(i + 1);
    }
  }
  if (!piece_slopes(points)) return std::string("slope is not a power of two");
  return std::nullopt;
}

// Drops points whose incoming and outgoing slopes agree. `outer` supplies the
// slope beyond each end when the ends themselves are removable.
std::vector<Breakpoint> minimize(const std::vector<Breakpoint>& points, const std::vector<long>& slopes,
                                 std::optional<long> outer) {
  std::vector<Breakpoint> kept;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const bool first = i == 0;
    const bool last = i + 1 == points.size();
    if ((first || last) && !outer) {
      kept.push_back(points[i]);
      continue;
    }
    const long in = first ? *outer : slopes[i - 1];
    const long out = last ? *outer : slopes[i];
    if (in != out) kept.push_back(points[i]);
  }
  return kept;
}

Dyadic affine_at(const Breakpoint& start, long log_slope, const Dyadic& x) {
  return start.y + (x - start.x).mul_pow2(log_slope);
}

Dyadic affine_inverse_at(const Breakpoint& start, long log_slope, const Dyadic& y) {
  return start.x + (y - start.y).mul_pow2(-log_slope);
}

// Index of the piece [p_i, p_{i+1}] containing v in the given coordinate.
template <class Proj>
std::size_t piece_index(const std::vector<Breakpoint>& points, const Dyadic& v, Proj proj) {
  auto it = std::upper_bound(points.begin(), points.end(), v,
                             [&](const Dyadic& value, const Breakpoint& p) { return value < proj(p); });
  auto idx = static_cast<std::size_t>(it - points.begin());
  if (idx == 0) return 0;
  return std::min(idx - 1, points.size() - 2);
}

void sort_unique(std::vector<Dyadic>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

PLMapUnit::PLMapUnit() : points_{{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(1)}}, log_slopes_{0} {}

std::optional<std::string> PLMapUnit::diagnose(const std::vector<Breakpoint>& points) {
  if (points.size() < 2) return std::string("needs at least the breakpoints (0,0) and (1,1)");
  if (points.front() != Breakpoint{Dyadic(0), Dyadic(0)}) return std::string("first breakpoint must be (0,0)");
  if (points.back() != Breakpoint{Dyadic(1), Dyadic(1)}) return std::string("last breakpoint must be (1,1)");
  return check_monotone(points);
}

PLMapUnit PLMapUnit::from_breakpoints(std::vector<Breakpoint> points) {
  if (auto problem = diagnose(points)) throw std::invalid_argument("invalid unit PL map: " + *problem);
  PLMapUnit f;
  f.points_ = minimize(points, *piece_slopes(points), std::nullopt);
  f.log_slopes_ = *piece_slopes(f.points_);
  return f;
}

Dyadic PLMapUnit::eval(const Dyadic& x) const {
  if (x.sign() < 0 || x > Dyadic(1)) throw std::domain_error("point " + x.str() + " outside [0,1]");
  const auto i = piece_index(points_, x, [](const Breakpoint& p) -> const Dyadic& { return p.x; });
  return affine_at(points_[i], log_slopes_[i], x);
}

Dyadic PLMapUnit::eval_inverse(const Dyadic& y) const {
  if (y.sign() < 0 || y > Dyadic(1)) throw std::domain_error("point " + y.str() + " outside [0,1]");
  const auto i = piece_index(points_, y, [](const Breakpoint& p) -> const Dyadic& { return p.y; });
  return affine_inverse_at(points_[i], log_slopes_[i], y);
}

OneSidedSlopes PLMapUnit::one_sided_slopes(const Dyadic& x) const {
  if (x.sign() < 0 || x > Dyadic(1)) throw std::domain_error("point " + x.str() + " outside [0,1]");
  OneSidedSlopes s;
  const auto by_x = [](const Breakpoint& p, const Dyadic& v) { return p.x < v; };
  if (x.sign() != 0) {
    auto it = std::lower_bound(points_.begin(), points_.end(), x, by_x);
    s.left = log_slopes_[static_cast<std::size_t>(it - points_.begin()) - 1];
  }
  if (x != Dyadic(1)) {
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](const Dyadic& v, const Breakpoint& p) { return v < p.x; });
    s.right = log_slopes_[static_cast<std::size_t>(it - points_.begin()) - 1];
  }
  return s;
}

PLMapLine PLMapLine::translation(std::int64_t amount) {
  PLMapLine f;
  f.left_tail_ = f.right_tail_ = amount;
  return f;
}

std::optional<std::string> PLMapLine::diagnose(const std::vector<Breakpoint>& points, std::int64_t left_tail,
                                               std::int64_t right_tail) {
  if (points.empty()) {
    if (left_tail != right_tail) return std::string("no breakpoints but left_tail != right_tail");
    return std::nullopt;
  }
  if (auto problem = check_monotone(points)) return problem;
  if (points.front().y != points.front().x + Dyadic(left_tail)) {
    return std::string("first breakpoint inconsistent with left_tail");
  }
  if (points.back().y != points.back().x + Dyadic(right_tail)) {
    return std::string("last breakpoint inconsistent with right_tail");
  }
  return std::nullopt;
}

PLMapLine PLMapLine::from_parts(std::vector<Breakpoint> points, std::int64_t left_tail, std::int64_t right_tail) {
  if (auto problem = diagnose(points, left_tail, right_tail)) {
    throw std::invalid_argument("invalid line PL map: " + *problem);
  }
  PLMapLine f;
  f.left_tail_ = left_tail;
  f.right_tail_ = right_tail;
  f.points_ = minimize(points, *piece_slopes(points), 0L);
  f.log_slopes_ = *piece_slopes(f.points_);
  return f;
}

Dyadic PLMapLine::eval(const Dyadic& x) const {
  if (points_.empty() || x <= points_.front().x) return x + Dyadic(left_tail_);
  if (x >= points_.back().x) return x + Dyadic(right_tail_);
  const auto i = piece_index(points_, x, [](const Breakpoint& p) -> const Dyadic& { return p.x; });
  return affine_at(points_[i], log_slopes_[i], x);
}

Dyadic PLMapLine::eval_inverse(const Dyadic& y) const {
  if (points_.empty() || y <= points_.front().y) return y - Dyadic(left_tail_);
  if (y >= points_.back().y) return y - Dyadic(right_tail_);
  const auto i = piece_index(points_, y, [](const Breakpoint& p) -> const Dyadic& { return p.y; });
  return affine_inverse_at(points_[i], log_slopes_[i], y);
}

Dyadic pl_eval(const PLMapUnit& f, const Dyadic& x) { return f.eval(x); }
Dyadic pl_eval(const PLMapLine& f, const Dyadic& x) { return f.eval(x); }

PLMapUnit pl_compose(const PLMapUnit& f, const PLMapUnit& g) {
  std::vector<Dyadic> xs;
  for (const auto& p : g.breakpoints()) xs.push_back(p.x);
  for (const auto& p : f.breakpoints()) xs.push_back(g.eval_inverse(p.x));
  sort_unique(xs);
  std::vector<Breakpoint> points;
  points.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = f.eval(g.eval(x));
    points.push_back({std::move(x), std::move(y)});
  }
  return PLMapUnit::from_breakpoints(std::move(points));
}

PLMapLine pl_compose(const PLMapLine& f, const PLMapLine& g) {
  const std::int64_t left = f.left_tail() + g.left_tail();
  const std::int64_t right = f.right_tail() + g.right_tail();
  std::vector<Dyadic> xs;
  for (const auto& p : g.breakpoints()) xs.push_back(p.x);
  for (const auto& p : f.breakpoints()) xs.push_back(g.eval_inverse(p.x));
  if (xs.empty()) return PLMapLine::translation(left);
  sort_unique(xs);
  std::vector<Breakpoint> points;
  points.reserve(xs.size());
  for (auto& x : xs) {
    Dyadic y = f.eval(g.eval(x));
    points.push_back({std::move(x), std::move(y)});
  }
  return PLMapLine::from_parts(std::move(points), left, right);
}

PLMapUnit pl_inverse(const PLMapUnit& f) {
  std::vector<Breakpoint> points;
  for (const auto& p : f.breakpoints()) points.push_back({p.y, p.x});
  return PLMapUnit::from_breakpoints(std::move(points));
}

PLMapLine pl_inverse(const PLMapLine& f) {
  std::vector<Breakpoint> points;
  for (const auto& p : f.breakpoints()) points.push_back({p.y, p.x});
  return PLMapLine::from_parts(std::move(points), -f.left_tail(), -f.right_tail());
}

OneSidedSlopes one_sided_slopes(const PLMapUnit& g, const Dyadic& x) { return g.one_sided_slopes(x); }

Generators generators() {
  const auto d = [](long num, std::uint32_t exp) { return Dyadic(BigInt(num), exp); };
  return {
      PLMapUnit::from_breakpoints({{0, 0}, {d(1, 1), d(1, 2)}, {d(3, 2), d(1, 1)}, {1, 1}}),
      PLMapUnit::from_breakpoints({{0, 0}, {d(1, 1), d(1, 1)}, {d(3, 2), d(5, 3)}, {d(7, 3), d(3, 2)}, {1, 1}}),
  };
}

PLMapUnit unit_word(std::string_view word) {
  static const Generators gens = generators();
  static const PLMapUnit a_inv = pl_inverse(gens.a);
  static const PLMapUnit b_inv = pl_inverse(gens.b);
  PLMapUnit result;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case 'A': result = pl_compose(gens.a, result); break;
      case 'a': result = pl_compose(a_inv, result); break;
      case 'B': result = pl_compose(gens.b, result); break;
      case 'b': result = pl_compose(b_inv, result); break;
      default: throw std::invalid_argument(std::string("word letter '") + *it + "' not in {A,B,a,b}");
    }
  }
  return result;
}

}  // namespace skewcert::thompson
