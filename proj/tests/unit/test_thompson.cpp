#include <doctest.h>

#include <set>

#include "../support/random.hpp"
#include "skewcert/thompson/cocycle.hpp"
#include "skewcert/thompson/conjugation.hpp"
#include "skewcert/thompson/json.hpp"
#include "skewcert/thompson/transitive.hpp"

using namespace skewcert;
using namespace skewcert::thompson;
using skewcert::testing::Rng;

namespace {

Dyadic d(long num, std::uint32_t exp) { return Dyadic(BigInt(num), exp); }

PLMapUnit random_element(Rng& rng, std::size_t max_len = 8) {
  return unit_word(skewcert::testing::random_word(rng, max_len));
}

// Oracle for eta straight from the three-case formula, reading one-sided
// slopes at every point of a candidate set.
IntConfig eta_by_formula(const PLMapUnit& g, const std::vector<Dyadic>& candidates) {
  IntConfig out(LampGroup::Z);
  for (const auto& x : candidates) {
    const auto s = one_sided_slopes(g, x);
    long value = 0;
    if (x.sign() == 0) value = *s.right;
    else if (x == Dyadic(1)) value = -*s.left;
    else value = *s.right - *s.left;
    out.add(x, value);
  }
  return out;
}

std::vector<Dyadic> dyadic_grid(std::uint32_t exp) {
  std::vector<Dyadic> out;
  for (long k = 0; k <= (1L << exp); ++k) out.push_back(d(k, exp));
  return out;
}

std::int64_t total(const IntConfig& f) {
  std::int64_t s = 0;
  for (const auto& [x, v] : f.entries()) s += v;
  return s;
}

}  // namespace

TEST_CASE("generators") {
  const auto [a, b] = generators();
  CHECK(a.log_slopes() == std::vector<long>{-1, 0, 1});
  CHECK(b.log_slopes() == std::vector<long>{0, -1, 0, 1});
  CHECK(a != b);
  CHECK_FALSE(a.is_identity());
  CHECK_FALSE(b.is_identity());
}

TEST_CASE("pl_eval examples") {
  const auto [a, b] = generators();
  CHECK(pl_eval(PLMapUnit(), d(5, 3)) == d(5, 3));
  CHECK(pl_eval(a, d(1, 1)) == d(1, 2));
  CHECK(pl_eval(a, d(5, 3)) == d(3, 3));
  CHECK(pl_eval(pl_compose(a, a), d(1, 1)) == d(1, 3));
  CHECK_THROWS_AS(pl_eval(a, d(3, 1)), std::domain_error);
  CHECK_THROWS_AS(pl_eval(a, d(-1, 4)), std::domain_error);
}

TEST_CASE("unit map validation") {
  CHECK_THROWS_AS(PLMapUnit::from_breakpoints({{0, 0}, {d(1, 1), d(1, 3)}, {1, 1}}), std::invalid_argument);
  CHECK(PLMapUnit::diagnose({{0, 0}, {d(1, 1), d(1, 3)}, {1, 1}}).value().find("power of two") != std::string::npos);
  CHECK(PLMapUnit::diagnose({{0, 0}, {d(1, 1), d(1, 1)}, {d(1, 1), d(3, 2)}, {1, 1}}).has_value());
  CHECK(PLMapUnit::diagnose({{0, d(1, 2)}, {1, 1}}).has_value());
  // Collinear interior breakpoints are dropped.
  const auto f = PLMapUnit::from_breakpoints({{0, 0}, {d(1, 2), d(1, 2)}, {1, 1}});
  CHECK(f.is_identity());
}

TEST_CASE("one-sided slopes") {
  const auto [a, b] = generators();
  CHECK(one_sided_slopes(PLMapUnit(), d(1, 1)) == OneSidedSlopes{0, 0});
  CHECK(one_sided_slopes(a, d(1, 1)) == OneSidedSlopes{-1, 0});
  CHECK(one_sided_slopes(a, Dyadic(0)) == OneSidedSlopes{std::nullopt, -1});
  CHECK(one_sided_slopes(a, Dyadic(1)) == OneSidedSlopes{1, std::nullopt});
  CHECK(one_sided_slopes(a, d(5, 3)) == OneSidedSlopes{0, 0});
}

TEST_CASE("group axioms on random words") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto f = random_element(rng), g = random_element(rng), h = random_element(rng);
    REQUIRE(pl_compose(pl_compose(f, g), h) == pl_compose(f, pl_compose(g, h)));
    REQUIRE(pl_compose(f, pl_inverse(f)).is_identity());
    REQUIRE(pl_compose(f, PLMapUnit()) == f);
    REQUIRE_FALSE(PLMapUnit::diagnose(pl_compose(f, g).breakpoints()).has_value());
  }
}

TEST_CASE("composition agrees pointwise") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_element(rng), g = random_element(rng);
    const auto fg = pl_compose(f, g);
    for (int k = 0; k < 10; ++k) {
      const Dyadic x = skewcert::testing::random_unit_dyadic(rng);
      REQUIRE(fg.eval(x) == f.eval(g.eval(x)));
      REQUIRE(pl_inverse(f).eval(f.eval(x)) == x);
    }
  }
}

TEST_CASE("eta examples") {
  const auto [a, b] = generators();
  CHECK(eta(PLMapUnit()).empty());
  const IntConfig ea = eta(a);
  CHECK(ea.size() == 4);
  CHECK(ea.at(Dyadic(0)) == -1);
  CHECK(ea.at(d(1, 1)) == 1);
  CHECK(ea.at(d(3, 2)) == 1);
  CHECK(ea.at(Dyadic(1)) == -1);
}

TEST_CASE("eta matches the three-case formula and sums to zero") {
  Rng rng(23);
  const auto grid = dyadic_grid(7);
  for (int i = 0; i < 100; ++i) {
    const auto g = random_element(rng, 6);
    std::vector<Dyadic> candidates = grid;
    for (const auto& p : g.breakpoints()) candidates.push_back(p.x);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    REQUIRE(eta(g) == eta_by_formula(g, candidates));
    REQUIRE(total(eta(g)) == 0);
  }
}

TEST_CASE("cocycle identity") {
  Rng rng(24);
  for (int i = 0; i < 500; ++i) {
    const auto g = random_element(rng), h = random_element(rng);
    const IntConfig lhs = eta(pl_compose(g, h));
    const IntConfig eg = eta(g), eh = eta(h);
    std::set<Dyadic> points{Dyadic(0), Dyadic(1)};
    for (const auto& [x, v] : lhs.entries()) points.insert(x);
    for (const auto& [x, v] : eh.entries()) points.insert(x);
    for (const auto& [x, v] : eg.entries()) points.insert(h.eval_inverse(x));
    for (const auto& x : points) REQUIRE(lhs.at(x) == eg.at(h.eval(x)) + eh.at(x));
  }
}

TEST_CASE("iota is a homomorphism") {
  Rng rng(25);
  const auto [a, b] = generators();
  CHECK(iota(PLMapUnit()).config.empty());
  CHECK(iota(a).config == eta(pl_inverse(a)));
  CHECK(iota(pl_compose(a, b)) == semidirect_mul(iota(a), iota(b)));
  for (int i = 0; i < 200; ++i) {
    const auto g = random_element(rng), h = random_element(rng);
    REQUIRE(iota(pl_compose(g, h)) == semidirect_mul(iota(g), iota(h)));
  }
}

TEST_CASE("beta is a free action") {
  Rng rng(26);
  const auto [a, b] = generators();
  IntConfig f(LampGroup::Z);
  f.add(d(1, 2), 3);
  f.add(d(5, 3), -2);
  CHECK(beta_apply(PLMapUnit(), f) == f);
  CHECK(beta_apply(a, IntConfig(LampGroup::Z)) == eta(pl_inverse(a)));
  for (int i = 0; i < 200; ++i) {
    const auto g = random_element(rng), h = random_element(rng);
    IntConfig cfg(LampGroup::Z);
    for (int k = 0; k < 4; ++k) {
      const Dyadic x = skewcert::testing::random_unit_dyadic(rng, 6);
      cfg.add(x, skewcert::testing::uniform(rng, -3, 3));
    }
    REQUIRE(beta_apply(pl_compose(g, h), cfg) == beta_apply(g, beta_apply(h, cfg)));
    if (g.is_identity()) {
      REQUIRE_FALSE(freeness_witness(g).has_value());
      continue;
    }
    const auto t = freeness_witness(g);
    REQUIRE(t.has_value());
    const IntConfig moved = beta_apply(g, cfg);
    REQUIRE(moved != cfg);
    REQUIRE(g.eval(*t) == *t);
    REQUIRE(moved.at(*t) - cfg.at(*t) == -eta(g).at(*t));
  }
}

TEST_CASE("kappa values") {
  CHECK(kappa(d(1, 1)) == Dyadic(0));
  CHECK(kappa(d(5, 3)) == d(1, 1));
  CHECK(kappa(d(1, 2)) == Dyadic(-1));
  CHECK(kappa(d(7, 3)) == Dyadic(2));
  for (long n = -16; n <= 16; ++n) CHECK(kappa(kappa_knot(n)) == Dyadic(n));
  CHECK_THROWS_AS(kappa(Dyadic(0)), std::domain_error);
  CHECK_THROWS_AS(kappa(Dyadic(1)), std::domain_error);
  Rng rng(27);
  Dyadic prev_x = d(1, 20), prev_y = kappa(prev_x);
  for (int i = 0; i < 1000; ++i) {
    const Dyadic x = skewcert::testing::random_unit_dyadic(rng, 20);
    REQUIRE(kappa_inv(kappa(x)) == x);
    REQUIRE(((x <=> prev_x) == (kappa(x) <=> prev_y)));
    const Dyadic y = skewcert::testing::random_dyadic(rng, 1 << 12, 10);
    REQUIRE(kappa(kappa_inv(y)) == y);
  }
}

TEST_CASE("phi conjugates the two pictures") {
  const auto [a, b] = generators();
  CHECK(phi(PLMapUnit()) == PLMapLine::translation(0));
  CHECK(phi_inv(phi(a)) == a);
  CHECK(phi_inv(phi(b)) == b);
  // x0 becomes the unit translation to the left.
  CHECK(phi(a) == PLMapLine::translation(-1));
  Rng rng(28);
  for (int i = 0; i < 100; ++i) {
    const Dyadic x = skewcert::testing::random_unit_dyadic(rng);
    REQUIRE(pl_eval(phi(a), kappa(x)) == kappa(pl_eval(a, x)));
    REQUIRE(pl_eval(phi(b), kappa(x)) == kappa(pl_eval(b, x)));
  }
  for (int i = 0; i < 100; ++i) {
    const auto f = random_element(rng), g = random_element(rng);
    const PLMapLine pf = phi(f);
    REQUIRE(phi(pl_compose(f, g)) == pl_compose(pf, phi(g)));
    REQUIRE(phi_inv(pf) == f);
    REQUIRE((pf.is_identity() == f.is_identity()));
    for (int k = 0; k < 5; ++k) {
      const Dyadic x = skewcert::testing::random_unit_dyadic(rng);
      REQUIRE(pf.eval(kappa(x)) == kappa(f.eval(x)));
    }
  }
}

TEST_CASE("line maps") {
  CHECK_THROWS_AS(PLMapLine::from_parts({}, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(PLMapLine::from_parts({{0, 1}}, 0, 1), std::invalid_argument);
  const auto t3 = PLMapLine::translation(3);
  CHECK(t3.eval(d(-5, 1)) == d(1, 1));
  CHECK(pl_compose(t3, pl_inverse(t3)).is_identity());
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const auto f = phi(random_element(rng)), g = phi(random_element(rng)), h = phi(random_element(rng));
    REQUIRE(pl_compose(pl_compose(f, g), h) == pl_compose(f, pl_compose(g, h)));
    REQUIRE(pl_compose(f, pl_inverse(f)).is_identity());
  }
}

TEST_CASE("tail translation") {
  const auto [a, b] = generators();
  const auto t = tail_translation(PLMapLine::translation(3));
  CHECK(t.shift == 3);
  CHECK(t.bound == Dyadic(0));
  const PLMapLine pb = phi(b);
  const auto tb = tail_translation(pb);
  for (int k = 0; k < 20; ++k) {
    const Dyadic x = tb.bound - d(k * 3, 2);
    CHECK(pb.eval(x) == x + Dyadic(tb.shift));
  }
  Rng rng(30);
  for (int i = 0; i < 200; ++i) {
    const auto h1 = phi(random_element(rng)), h2 = phi(random_element(rng));
    REQUIRE(tail_translation(pl_compose(h1, h2)).shift ==
            tail_translation(h1).shift + tail_translation(h2).shift);
  }
}

TEST_CASE("strong transitivity of F on D") {
  CHECK(strong_transitive_F({}, {}).is_identity());
  const std::vector<Dyadic> xs{d(1, 2), d(1, 1)}, ys{d(1, 1), d(7, 3)};
  const auto g = strong_transitive_F(xs, ys);
  CHECK(g.eval(xs[0]) == ys[0]);
  CHECK(g.eval(xs[1]) == ys[1]);
  const auto same = strong_transitive_F(xs, xs);
  CHECK(same.eval(xs[0]) == xs[0]);
  const std::vector<Dyadic> one{d(1, 2)}, unsorted{d(1, 1), d(1, 2)}, outside{Dyadic(1)};
  CHECK_THROWS_AS(strong_transitive_F(xs, one), std::invalid_argument);
  CHECK_THROWS_AS(strong_transitive_F(unsorted, xs), std::invalid_argument);
  CHECK_THROWS_AS(strong_transitive_F(outside, one), std::invalid_argument);

  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const auto n = static_cast<std::size_t>(skewcert::testing::uniform(rng, 0, 6));
    const auto gen = [](Rng& r) { return skewcert::testing::random_unit_dyadic(r, 9); };
    const auto src = skewcert::testing::increasing_sample<Dyadic>(rng, n, gen);
    const auto dst = skewcert::testing::increasing_sample<Dyadic>(rng, n, gen);
    const auto h = strong_transitive_F(src, dst);
    REQUIRE_FALSE(PLMapUnit::diagnose(h.breakpoints()).has_value());
    for (std::size_t k = 0; k < n; ++k) REQUIRE(h.eval(src[k]) == dst[k]);
  }
}

TEST_CASE("json round trip and rejection") {
  const auto [a, b] = generators();
  CHECK(Codec<PLMapUnit>::decode(Codec<PLMapUnit>::encode(a)) == a);
  const PLMapLine pb = phi(b);
  CHECK(Codec<PLMapLine>::decode(Codec<PLMapLine>::encode(pb)) == pb);
  Json bad = Codec<PLMapUnit>::encode(a);
  bad["breakpoints"][1][1] = to_json(d(1, 3));
  CHECK_THROWS_AS(Codec<PLMapUnit>::decode(bad), SchemaError);
  const IntConfig ea = eta(a);
  CHECK(Codec<IntConfig>::decode(Codec<IntConfig>::encode(ea)) == ea);
}
