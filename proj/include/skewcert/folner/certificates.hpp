#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "skewcert/exact/rational.hpp"
#include "skewcert/folner/orbit.hpp"
#include "skewcert/schema.hpp"

namespace skewcert::folner {

/// Outcome of a certificate check. `reason` is a short code ("ok" when
/// accepted); `detail` carries the numbers behind it.
struct Verdict {
  bool accepted = true;
  std::string reason = "ok";
  Json detail = Json::object();

  static Verdict reject(std::string reason, Json detail) { return {false, std::move(reason), std::move(detail)}; }
};

template <GroupAction G>
struct SetFolnerCertificate {
  using Point = typename NamedAction<G>::Point;

  std::string action;
  Point base;
  std::vector<std::string> elements;
  Rational theta;
  std::vector<OrbitPoint<Point>> T;
  std::vector<std::size_t> per_g;
};

/// The matching sizes |T| vs g.T for each test word, under equality closeness.
template <GroupAction G>
std::vector<std::size_t> folner_matchings(const NamedAction<G>& action, const std::vector<std::string>& elements,
                                          const std::vector<typename NamedAction<G>::Point>& T) {
  std::vector<std::size_t> out;
  for (const auto& w : elements) {
    const G g = action.element(w);
    std::vector<typename NamedAction<G>::Point> gT;
    gT.reserve(T.size());
    for (const auto& p : T) gT.push_back(NamedAction<G>::apply(g, p));
    out.push_back(match_equal(T, gT));
  }
  return out;
}

template <GroupAction G>
Verdict verify_set_certificate(const NamedAction<G>& action, const SetFolnerCertificate<G>& cert) {
  using Point = typename NamedAction<G>::Point;
  if (cert.action != action.name()) {
    return Verdict::reject("action-mismatch", {{"expected", action.name()}, {"found", cert.action}});
  }
  if (cert.T.empty()) return Verdict::reject("empty-set", {});
  if (cert.per_g.size() != cert.elements.size()) {
    return Verdict::reject("per-g-length", {{"elements", cert.elements.size()}, {"per_g", cert.per_g.size()}});
  }
  for (const auto& w : cert.elements) {
    if (!action.valid_word(w)) return Verdict::reject("unknown-letter", {{"word", w}});
  }
  std::set<Point> distinct;
  std::vector<Point> T;
  for (std::size_t i = 0; i < cert.T.size(); ++i) {
    const auto& [p, w] = cert.T[i];
    if (!action.valid_word(w)) return Verdict::reject("unknown-letter", {{"word", w}, {"index", i}});
    if (action.apply_word(w, cert.base) != p) return Verdict::reject("bad-witness", {{"index", i}, {"word", w}});
    if (!distinct.insert(p).second) return Verdict::reject("duplicate-point", {{"index", i}});
    T.push_back(p);
  }
  const auto sizes = folner_matchings(action, cert.elements, T);
  Json ratios = Json::array();
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    const Rational ratio(BigInt(static_cast<unsigned long>(sizes[k])), BigInt(static_cast<unsigned long>(T.size())));
    ratios.push_back({{"element", cert.elements[k]}, {"matching", sizes[k]}, {"ratio", ratio.str()}});
    if (sizes[k] != cert.per_g[k]) {
      return Verdict::reject("per-g-mismatch",
                             {{"element", cert.elements[k]}, {"stated", cert.per_g[k]}, {"computed", sizes[k]}});
    }
    if (ratio < cert.theta) {
      return Verdict::reject("below-theta",
                             {{"element", cert.elements[k]}, {"ratio", ratio.str()}, {"theta", cert.theta.str()}});
    }
  }
  return {true, "ok", {{"size", T.size()}, {"ratios", ratios}}};
}

/// A finitely supported measure with masses mass[i] / denominator at points[i].
/// Points are sorted and distinct, masses positive.
template <class Point>
struct FiniteMeasure {
  std::vector<Point> points;
  std::vector<std::uint64_t> mass;
  BigInt denominator = 1;

  std::size_t size() const { return points.size(); }
  Rational weight(std::size_t i) const { return Rational(BigInt(static_cast<unsigned long>(mass[i])), denominator); }

  /// Mass numerator at x, or 0.
  std::uint64_t mass_at(const Point& x) const {
    auto it = std::lower_bound(points.begin(), points.end(), x);
    if (it == points.end() || !(*it == x)) return 0;
    return mass[static_cast<std::size_t>(it - points.begin())];
  }

  /// Builds from unsorted (point, mass) pairs, merging repeated points.
  static FiniteMeasure from_pairs(std::vector<std::pair<Point, std::uint64_t>> pairs, BigInt denominator) {
    std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FiniteMeasure mu;
    mu.denominator = std::move(denominator);
    for (auto& [x, m] : pairs) {
      if (!mu.points.empty() && mu.points.back() == x) {
        mu.mass.back() += m;
      } else {
        mu.points.push_back(std::move(x));
        mu.mass.push_back(m);
      }
    }
    return mu;
  }
};

template <GroupAction G>
struct ReiterCertificate {
  using Point = typename GroupTraits<G>::point_type;

  std::string action;
  std::vector<std::string> elements;
  Rational epsilon;
  FiniteMeasure<Point> mu;
};

/// ||mu - g.mu||_1 exactly, where (g.mu)(y) = mu(g^-1 y).
template <GroupAction G>
Rational l1_defect(const FiniteMeasure<typename GroupTraits<G>::point_type>& mu, const G& g) {
  const G gi = GroupTraits<G>::inverse(g);
  unsigned __int128 total = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    // At y = g x the pushforward has mass mu(x); mu has mass_at(y).
    const std::uint64_t here = mu.mass_at(GroupTraits<G>::apply(g, mu.points[i]));
    total += here > mu.mass[i] ? here - mu.mass[i] : mu.mass[i] - here;
    // Points of mu outside g.supp(mu) are missed above.
    if (mu.mass_at(GroupTraits<G>::apply(gi, mu.points[i])) == 0) total += mu.mass[i];
  }
  BigInt num;
  num = static_cast<unsigned long>(total >> 64);
  num <<= 64;
  num += static_cast<unsigned long>(total & ~std::uint64_t{0});
  return Rational(num, mu.denominator);
}

template <GroupAction G>
Verdict verify_reiter_certificate(const NamedAction<G>& action, const ReiterCertificate<G>& cert) {
  if (cert.action != action.name()) {
    return Verdict::reject("action-mismatch", {{"expected", action.name()}, {"found", cert.action}});
  }
  const auto& mu = cert.mu;
  if (mu.points.empty() || mu.points.size() != mu.mass.size()) return Verdict::reject("empty-measure", {});
  if (mu.denominator <= 0) return Verdict::reject("bad-denominator", {});
  BigInt sum = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu.mass[i] == 0) return Verdict::reject("non-positive-weight", {{"index", i}});
    if (i > 0 && !(mu.points[i - 1] < mu.points[i])) return Verdict::reject("unsorted-support", {{"index", i}});
    sum += static_cast<unsigned long>(mu.mass[i]);
  }
  if (sum != mu.denominator) {
    return Verdict::reject("not-probability", {{"total", Rational(sum, mu.denominator).str()}});
  }
  for (const auto& w : cert.elements) {
    if (!action.valid_word(w)) return Verdict::reject("unknown-letter", {{"word", w}});
  }
  const Rational bound = Rational(2) * cert.epsilon;
  Json defects = Json::array();
  for (const auto& w : cert.elements) {
    const Rational d = l1_defect(mu, action.element(w));
    defects.push_back({{"element", w}, {"defect", d.str()}});
    if (d > bound) return Verdict::reject("defect-too-large", {{"element", w}, {"defect", d.str()}, {"bound", bound.str()}});
  }
  return {true, "ok", {{"support", mu.size()}, {"defects", defects}}};
}

template <GroupAction G>
struct SimulationWitness {
  std::vector<std::pair<G, G>> pairs;  // (g, h_g)
  std::vector<G> S;
  G t;
  std::vector<typename GroupTraits<G>::point_type> P;
};

/// Accepts iff g s t and h_g s t agree on every p in P.
template <GroupAction G>
Verdict check_simulation_witness(const SimulationWitness<G>& w) {
  using Traits = GroupTraits<G>;
  for (std::size_t s = 0; s < w.S.size(); ++s) {
    const G st = Traits::compose(w.S[s], w.t);
    for (std::size_t k = 0; k < w.pairs.size(); ++k) {
      const G gst = Traits::compose(w.pairs[k].first, st);
      const G hst = Traits::compose(w.pairs[k].second, st);
      for (std::size_t p = 0; p < w.P.size(); ++p) {
        if (!(Traits::apply(gst, w.P[p]) == Traits::apply(hst, w.P[p]))) {
          return Verdict::reject("disagreement", {{"g", k}, {"s", s}, {"p", p}});
        }
      }
    }
  }
  return {};
}

template <GroupAction G>
struct ApproximationWitness {
  G g;
  G h;
  std::vector<typename GroupTraits<G>::point_type> A;
};

template <GroupAction G>
Verdict check_approximation_witness(const ApproximationWitness<G>& w) {
  for (std::size_t i = 0; i < w.A.size(); ++i) {
    if (!(GroupTraits<G>::apply(w.g, w.A[i]) == GroupTraits<G>::apply(w.h, w.A[i]))) {
      return Verdict::reject("disagreement", {{"x", i}});
    }
  }
  return {};
}

}  // namespace skewcert::folner
