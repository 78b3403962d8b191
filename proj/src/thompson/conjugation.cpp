#include "skewcert/thompson/conjugation.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcert::thompson {
namespace {

// log2 of t_{n+1} - t_n.
long knot_gap_log2(long n) { return n >= 0 ? -(n + 2) : n - 1; }

// The n with t_n <= x < t_{n+1}.
long knot_index(const Dyadic& x) {
  static const Dyadic half = Dyadic::pow2(-1);
  if (x < half) return x.floor_log2() + 1;
  const Dyadic u = Dyadic(1) - x;
  const long k = u.floor_log2();
  return u == Dyadic::pow2(static_cast<int>(k)) ? -k - 1 : -k - 2;
}

long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer part out of range");
  return v.get_si();
}

void sort_unique(std::vector<Dyadic>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

Dyadic kappa_knot(long n) {
  if (n >= 0) return Dyadic(1) - Dyadic::pow2(static_cast<int>(-(n + 1)));
  return Dyadic::pow2(static_cast<int>(n - 1));
}

Dyadic kappa(const Dyadic& x) {
  if (x.sign() <= 0 || x >= Dyadic(1)) throw std::domain_error("kappa is defined on (0,1), got " + x.str());
  const long n = knot_index(x);
  return (x - kappa_knot(n)).mul_pow2(-knot_gap_log2(n)) + Dyadic(n);
}

Dyadic kappa_inv(const Dyadic& y) {
  const long n = to_long(y.floor());
  return kappa_knot(n) + (y - Dyadic(n)).mul_pow2(knot_gap_log2(n));
}

PLMapLine phi(const PLMapUnit& g) {
  if (g.is_identity()) return PLMapLine::translation(0);
  const auto& points = g.breakpoints();
  const long left_log = g.log_slopes().front();
  const long right_log = g.log_slopes().back();
  const Dyadic half = Dyadic::pow2(-1);

  // Near 0, g(x) = 2^k x and kappa o g o kappa^-1 is translation by k once both
  // x and g(x) sit in (0, 1/2]; symmetrically near 1.
  long lo = 0;
  while (!(kappa_knot(lo) <= points[1].x && g.eval(kappa_knot(lo)) <= half)) --lo;
  long hi = 0;
  while (!(kappa_knot(hi) >= points[points.size() - 2].x && g.eval(kappa_knot(hi)) >= half)) ++hi;
  const Dyadic left = kappa_knot(lo);
  const Dyadic right = kappa_knot(hi);

  std::vector<Dyadic> xs{left, right};
  for (const auto& p : points) {
    if (left <= p.x && p.x <= right) xs.push_back(p.x);
  }
  for (long n = lo; n <= hi; ++n) xs.push_back(kappa_knot(n));
  const long image_lo = knot_index(g.eval(left));
  const long image_hi = knot_index(g.eval(right));
  for (long n = image_lo; n <= image_hi; ++n) {
    const Dyadic x = g.eval_inverse(kappa_knot(n));
    if (left <= x && x <= right) xs.push_back(x);
  }
  sort_unique(xs);

  std::vector<Breakpoint> line;
  line.reserve(xs.size());
  for (const auto& x : xs) line.push_back({kappa(x), kappa(g.eval(x))});
  return PLMapLine::from_parts(std::move(line), left_log, -right_log);
}

PLMapUnit phi_inv(const PLMapLine& h) {
  const std::int64_t c_left = h.left_tail();
  const std::int64_t c_right = h.right_tail();
  BigInt lo = std::min<std::int64_t>(0, -c_left);
  BigInt hi = std::max<std::int64_t>(0, -c_right);
  if (!h.breakpoints().empty()) {
    lo = std::min(lo, h.breakpoints().front().x.floor());
    hi = std::max(hi, h.breakpoints().back().x.ceil());
  }
  const long n_lo = to_long(lo);
  const long n_hi = to_long(hi);

  std::vector<Dyadic> ys;
  for (long n = n_lo; n <= n_hi; ++n) ys.push_back(Dyadic(n));
  for (const auto& p : h.breakpoints()) ys.push_back(p.x);
  const long image_lo = to_long(h.eval(Dyadic(n_lo)).floor());
  const long image_hi = to_long(h.eval(Dyadic(n_hi)).ceil());
  for (long n = image_lo; n <= image_hi; ++n) {
    const Dyadic y = h.eval_inverse(Dyadic(n));
    if (Dyadic(n_lo) <= y && y <= Dyadic(n_hi)) ys.push_back(y);
  }
  sort_unique(ys);

  std::vector<Breakpoint> unit;
  unit.reserve(ys.size() + 2);
  unit.push_back({0, 0});
  for (const auto& y : ys) unit.push_back({kappa_inv(y), kappa_inv(h.eval(y))});
  unit.push_back({1, 1});
  return PLMapUnit::from_breakpoints(std::move(unit));
}

PLMapLine line_word(std::string_view word) { return phi(unit_word(word)); }

TailTranslation tail_translation(const PLMapLine& h) {
  if (h.breakpoints().empty()) return {h.left_tail(), Dyadic(0)};
  return {h.left_tail(), h.breakpoints().front().x};
}

}  // namespace skewcert::thompson
