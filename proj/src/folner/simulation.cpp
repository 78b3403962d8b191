#include "skewcert/folner/simulation.hpp"

#include "skewcert/monod/constructors.hpp"
#include "skewcert/thompson/conjugation.hpp"

namespace skewcert::folner {

ThompsonChoice thompson_choose_t(const std::vector<thompson::PLMapLine>& E, const std::vector<std::int64_t>& S,
                                 const std::vector<Dyadic>& P) {
  ThompsonChoice out;
  auto& w = out.witness;
  std::optional<Dyadic> bound;
  for (const auto& g : E) {
    const auto tail = thompson::tail_translation(g);
    w.pairs.emplace_back(g, thompson::PLMapLine::translation(tail.shift));
    // s.t.p = p + s - N must stay <= tail.bound for the largest s.
    for (auto s : S) {
      const Dyadic b = tail.bound - Dyadic(s);
      if (!bound || b < *bound) bound = b;
    }
  }
  for (auto s : S) w.S.push_back(thompson::PLMapLine::translation(s));
  w.P = P;
  if (bound && !P.empty()) {
    const Dyadic top = *std::max_element(P.begin(), P.end());
    const BigInt need = (top - *bound).ceil();
    if (need > 0) out.N = need.get_si();
  }
  w.t = thompson::PLMapLine::translation(-out.N);
  return out;
}

MonodChoice monod_choose_t(const std::vector<monod::PPElement>& E, const std::vector<monod::PPElement>& S,
                           const std::vector<ProjPoint>& P) {
  MonodChoice out;
  auto& w = out.witness;
  std::optional<Rational> a;
  for (const auto& g : E) {
    const auto tail = monod::tail_affine(g);
    w.pairs.emplace_back(g, monod::PPElement::from_parts({}, {tail.m}));
    for (const auto& s : S) {
      const Rational b = s.eval_inverse(ProjPoint(tail.a)).affine();
      if (!a || b > *a) a = b;
    }
  }
  out.a = a.value_or(Rational(0));
  w.S = S;
  w.P = P;
  w.t = monod::attractive_translation(P, out.a);
  return out;
}

}  // namespace skewcert::folner
