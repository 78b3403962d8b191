#pragma once

#include <map>
#include <optional>
#include <string>

#include "skewcert/folner/actions.hpp"
#include "skewcert/folner/certificates.hpp"
#include "skewcert/folner/orbit.hpp"

namespace skewcert {

/// mu = 1/(2n+1) sum_{j=0}^{2n} uniform(configurations inside [-j, 2n-j]) on the
/// packed lamplighter action, tested against L and T with
/// epsilon = (1 - 2^-(2n+1)) / (2n+1). Requires 1 <= n <= 11 (memory).
folner::ReiterCertificate<Lamplighter> lamplighter_reiter(int n);

/// The exact closed forms the construction is meant to hit.
Rational lamplighter_shift_defect(int n);
Rational lamplighter_epsilon(int n);

struct ProbeOptions {
  Rational epsilon;            // target: accept once every defect is <= 2 epsilon
  std::size_t budget = 10000;  // max box-configurations enumerated per candidate
  std::size_t max_radius = 8;
};

template <GroupAction G>
struct ProbeResult {
  bool accepted = false;
  folner::ReiterCertificate<SemidirectElem<G>> best;  // epsilon = half the worst defect
  Rational best_defect;
  std::size_t radius = 0;
  std::size_t half_length = 0;
  std::size_t candidates = 0;
};

/// Reiter-style search on the configuration space over a base action. The
/// candidate measure averages uniform(configurations inside Y_j) over the
/// chain Y_j = s^j Y_0, |j| <= half_length, where Y_0 is the Schreier ball of
/// the base origin and s the first base generator. Returns the best candidate
/// found within budget.
template <GroupAction G>
ProbeResult<G> extensive_probe(const folner::NamedAction<G>& base, const ProbeOptions& options) {
  using E = SemidirectElem<G>;
  using P = typename GroupTraits<G>::point_type;
  const auto lifted = folner::wreath_action(base);
  std::vector<std::string> tests;
  for (char c : lifted.letters()) tests.emplace_back(1, c);
  if (base.letters().empty()) throw std::invalid_argument("extensive_probe needs a base generator");
  const G& s = base.generator(base.letters()[0]);
  const G si = GroupTraits<G>::inverse(s);

  ProbeResult<G> out;
  bool have = false;
  std::size_t previous_ball = 0;
  for (std::size_t r = 0; r <= options.max_radius; ++r) {
    std::vector<P> Y0;
    try {
      for (auto& p : folner::schreier_ball(base, {base.origin()}, base.symmetric_letters(), r, 64)) {
        Y0.push_back(p.point[0]);
      }
    } catch (const folner::BudgetExceeded&) {
      break;
    }
    if (Y0.size() >= 63 || (std::size_t{1} << Y0.size()) > options.budget) break;
    if (r > 0 && Y0.size() == previous_ball) break;
    previous_ball = Y0.size();
    const std::size_t subsets = std::size_t{1} << Y0.size();
    // Longer chains only help the shift; once the worst defect stalls, widen the window instead.
    Rational radius_best(-1);
    std::size_t stalled = 0;
    for (std::size_t L = 0; (2 * L + 1) * subsets <= options.budget && stalled < 4; ++L) {
      std::map<Config<P>, std::uint64_t> masses;
      // Box j = s^j Y0 for j in [-L, L].
      std::vector<P> box = Y0;
      for (std::size_t k = 0; k < L; ++k) {
        for (auto& p : box) p = GroupTraits<G>::apply(si, p);
      }
      for (std::size_t j = 0; j < 2 * L + 1; ++j) {
        for (std::size_t m = 0; m < subsets; ++m) {
          Config<P> f(LampGroup::Z2);
          for (std::size_t b = 0; b < box.size(); ++b) {
            if (m >> b & 1) f.add(box[b], 1);
          }
          ++masses[f];
        }
        for (auto& p : box) p = GroupTraits<G>::apply(s, p);
      }
      folner::ReiterCertificate<E> cert;
      cert.action = lifted.name();
      cert.elements = tests;
      cert.mu.denominator = BigInt(static_cast<unsigned long>((2 * L + 1) * subsets));
      for (auto& [f, m] : masses) {
        cert.mu.points.push_back(f);
        cert.mu.mass.push_back(m);
      }
      Rational worst(0);
      for (const auto& w : tests) worst = std::max(worst, folner::l1_defect(cert.mu, lifted.element(w)));
      cert.epsilon = worst * Rational(BigInt(1), BigInt(2));
      ++out.candidates;
      if (radius_best < Rational(0) || worst < radius_best) {
        radius_best = worst;
        stalled = 0;
      } else {
        ++stalled;
      }
      if (!have || worst < out.best_defect ||
          (worst == out.best_defect && cert.mu.size() < out.best.mu.size())) {
        have = true;
        out.best = std::move(cert);
        out.best_defect = worst;
        out.radius = r;
        out.half_length = L;
      }
      if (out.best_defect <= Rational(2) * options.epsilon) {
        out.accepted = true;
        return out;
      }
    }
  }
  return out;
}

}  // namespace skewcert
