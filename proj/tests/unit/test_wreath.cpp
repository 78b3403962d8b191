#include <doctest.h>

#include "../support/random.hpp"
#include "skewcert/folner/json.hpp"
#include "skewcert/thompson/cocycle.hpp"
#include "skewcert/wreath/reiter.hpp"

using namespace skewcert;
using skewcert::testing::Rng;
using skewcert::testing::uniform;

namespace {

using ZConfig = Config<std::int64_t>;
using ZElem = SemidirectElem<IntShift>;

ZConfig random_config(Rng& rng, LampGroup lamps, std::int64_t span = 12) {
  ZConfig f(lamps);
  const auto n = uniform(rng, 0, 5);
  for (std::int64_t i = 0; i < n; ++i) f.add(uniform(rng, -span, span), uniform(rng, -3, 3));
  return f;
}

ZElem random_elem(Rng& rng, LampGroup lamps) { return {random_config(rng, lamps), IntShift{uniform(rng, -5, 5)}}; }

Lamplighter random_packed(Rng& rng) {
  Lamplighter g;
  for (int i = 0; i < 4; ++i) g.lamps ^= LampWindow::single(uniform(rng, -6, 6)).bits;
  g.shift = uniform(rng, -4, 4);
  return g;
}

ZElem unpack(const Lamplighter& g) { return {to_config(LampWindow{g.lamps}), IntShift{g.shift}}; }

// Oracle: the lamplighter measure summed box by box with rational weights.
std::map<ZConfig, Rational> boxes_oracle(int n) {
  std::map<ZConfig, Rational> mu;
  const int w = 2 * n + 1;
  const Rational each(BigInt(1), BigInt(w) * (BigInt(1) << static_cast<unsigned>(w)));
  for (int j = 0; j < w; ++j) {
    for (int m = 0; m < (1 << w); ++m) {
      ZConfig f(LampGroup::Z2);
      for (int b = 0; b < w; ++b) {
        if (m >> b & 1) f.add(-j + b, 1);
      }
      mu[f] += each;
    }
  }
  return mu;
}

// Oracle: l1 distance between two sparse rational measures.
template <class K>
Rational l1(const std::map<K, Rational>& a, const std::map<K, Rational>& b) {
  Rational total(0);
  for (const auto& [x, v] : a) {
    auto it = b.find(x);
    total += (it == b.end() ? v : v - it->second).abs();
  }
  for (const auto& [x, v] : b) {
    if (!a.contains(x)) total += v;
  }
  return total;
}

}  // namespace

TEST_CASE("tau_apply") {
  ZConfig f(LampGroup::Z);
  f.add(0, 1);
  CHECK(tau_apply(IntShift{0}, f) == f);
  ZConfig g(LampGroup::Z);
  g.add(1, 1);
  CHECK(tau_apply(IntShift{1}, f) == g);

  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const IntShift a{uniform(rng, -9, 9)}, b{uniform(rng, -9, 9)};
    const auto h = random_config(rng, LampGroup::Z);
    CHECK(tau_apply(GroupTraits<IntShift>::compose(a, b), h) == tau_apply(a, tau_apply(b, h)));
    const auto moved = tau_apply(a, h);
    CHECK(moved.size() == h.size());
    for (const auto& [x, v] : h.entries()) CHECK(moved.at(x + a.amount) == v);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = thompson::unit_word(skewcert::testing::random_word(rng, 6));
    const auto b = thompson::unit_word(skewcert::testing::random_word(rng, 6));
    const auto h = thompson::eta(thompson::unit_word(skewcert::testing::random_word(rng, 6)));
    CHECK(tau_apply(thompson::pl_compose(a, b), h) == tau_apply(a, tau_apply(b, h)));
  }
}

TEST_CASE("semidirect group axioms") {
  Rng rng(102);
  for (auto lamps : {LampGroup::Z, LampGroup::Z2}) {
    const auto e = semidirect_identity<IntShift>(lamps);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = random_elem(rng, lamps), b = random_elem(rng, lamps), c = random_elem(rng, lamps);
      CHECK(semidirect_mul(e, a) == a);
      CHECK(semidirect_mul(a, e) == a);
      CHECK(semidirect_mul(a, semidirect_inv(a)) == e);
      CHECK(semidirect_mul(semidirect_inv(a), a) == e);
      CHECK(semidirect_mul(semidirect_mul(a, b), c) == semidirect_mul(a, semidirect_mul(b, c)));
      const auto f = random_config(rng, lamps);
      CHECK(wreath_act(semidirect_mul(a, b), f) == wreath_act(a, wreath_act(b, f)));
    }
  }
  ZConfig z(LampGroup::Z), z2(LampGroup::Z2);
  z.add(0, 1);
  z2.add(0, 1);
  CHECK_THROWS_AS(semidirect_mul(ZElem{z, {}}, ZElem{z2, {}}), std::invalid_argument);
}

TEST_CASE("wreath_act and toggles") {
  const auto e = semidirect_identity<IntShift>(LampGroup::Z2);
  ZConfig f(LampGroup::Z2);
  f.add(3, 1);
  CHECK(wreath_act(e, f) == f);
  const auto toggle = lamp_toggle<IntShift>(0, LampGroup::Z2);
  const ZConfig empty(LampGroup::Z2);
  ZConfig lit(LampGroup::Z2);
  lit.add(0, 1);
  CHECK(wreath_act(toggle, empty) == lit);
  CHECK(wreath_act(toggle, wreath_act(toggle, f)) == f);
  Rng rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = uniform(rng, -10, 10);
    const auto t = lamp_toggle<IntShift>(x, LampGroup::Z2);
    const auto h = random_config(rng, LampGroup::Z2);
    CHECK(wreath_act(t, wreath_act(t, h)) == h);
  }
}

TEST_CASE("iota lands in the semidirect product") {
  Rng rng(104);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = thompson::unit_word(skewcert::testing::random_word(rng, 8));
    const auto h = thompson::unit_word(skewcert::testing::random_word(rng, 8));
    CHECK(thompson::iota(thompson::pl_compose(g, h)) == semidirect_mul(thompson::iota(g), thompson::iota(h)));
  }
}

TEST_CASE("packed lamplighter agrees with the generic product") {
  Rng rng(105);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_packed(rng), b = random_packed(rng);
    const auto ab = GroupTraits<Lamplighter>::compose(a, b);
    CHECK(unpack(ab) == semidirect_mul(unpack(a), unpack(b)));
    CHECK(unpack(GroupTraits<Lamplighter>::inverse(a)) == semidirect_inv(unpack(a)));
    const LampWindow x{random_packed(rng).lamps};
    CHECK(to_config(GroupTraits<Lamplighter>::apply(a, x)) == wreath_act(unpack(a), to_config(x)));
    CHECK(to_window(to_config(x)) == x);
  }
  CHECK_THROWS_AS(shift_lamps(LampWindow::single(31).bits, 1), std::out_of_range);
  CHECK_THROWS_AS(shift_lamps(LampWindow::single(-32).bits, -1), std::out_of_range);
}

TEST_CASE("lamplighter Reiter measure") {
  CHECK(lamplighter_shift_defect(1) == Rational(BigInt(7), BigInt(12)));
  const auto action = folner::lamplighter_action();
  for (int n : {1, 2, 3}) {
    const auto cert = lamplighter_reiter(n);
    CHECK(cert.mu.size() == static_cast<std::size_t>(n + 1) << (2 * n + 1));
    const auto flip = folner::l1_defect(cert.mu, action.element("L"));
    const auto shift = folner::l1_defect(cert.mu, action.element("T"));
    CHECK(flip == 0);
    CHECK(shift == lamplighter_shift_defect(n));
    CHECK(folner::verify_reiter_certificate(action, cert).accepted);

    // Same measure as the box-by-box oracle, and the oracle's own defects agree.
    const auto oracle = boxes_oracle(n);
    REQUIRE(oracle.size() == cert.mu.size());
    for (std::size_t i = 0; i < cert.mu.size(); ++i) {
      CHECK(oracle.at(to_config(cert.mu.points[i])) == cert.mu.weight(i));
    }
    std::map<ZConfig, Rational> shifted, flipped;
    const auto toggle = lamp_toggle<IntShift>(0, LampGroup::Z2);
    for (const auto& [f, v] : oracle) {
      shifted[tau_apply(IntShift{1}, f)] += v;
      flipped[wreath_act(toggle, f)] += v;
    }
    CHECK(l1(oracle, shifted) == shift);
    CHECK(l1(oracle, flipped) == 0);
  }
  CHECK_THROWS_AS(lamplighter_reiter(0), std::invalid_argument);
  CHECK_THROWS_AS(lamplighter_reiter(12), std::invalid_argument);
}

TEST_CASE("extensive probe") {
  SUBCASE("trivial group") {
    const folner::NamedAction<IntShift> trivial("trivial", {{'I', IntShift{0}}}, std::int64_t{0});
    const auto result = extensive_probe(trivial, {Rational(0), 1000, 4});
    CHECK(result.accepted);
    CHECK(result.best_defect == 0);
    CHECK(folner::verify_reiter_certificate(folner::wreath_action(trivial), result.best).accepted);
  }
  SUBCASE("Z on Z reproduces the lamplighter construction") {
    const auto base = folner::z_shift_action();
    const auto result = extensive_probe(base, {lamplighter_epsilon(3), 1000, 6});
    REQUIRE(result.accepted);
    CHECK(result.best_defect == lamplighter_shift_defect(3));
    CHECK(result.radius == 3);
    CHECK(result.half_length == 3);
    const auto reference = lamplighter_reiter(3);
    REQUIRE(result.best.mu.size() == reference.mu.size());
    std::map<ZConfig, Rational> a, b;
    for (std::size_t i = 0; i < reference.mu.size(); ++i) {
      a[to_config(reference.mu.points[i])] = reference.mu.weight(i);
      b[result.best.mu.points[i]] = result.best.mu.weight(i);
    }
    CHECK(a == b);
    CHECK(folner::verify_reiter_certificate(folner::wreath_action(base), result.best).accepted);
  }
  SUBCASE("F on the dyadics is exploratory") {
    const auto base = folner::thompson_unit_action();
    const auto result = extensive_probe(base, {Rational(0), 2000, 3});
    CHECK(result.candidates > 0);
    CHECK(result.best_defect > 0);
    CHECK(folner::verify_reiter_certificate(folner::wreath_action(base), result.best).accepted);
  }
}

TEST_CASE("json") {
  Rng rng(106);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_elem(rng, trial % 2 ? LampGroup::Z : LampGroup::Z2);
    CHECK(Codec<ZElem>::decode(Codec<ZElem>::encode(a)) == a);
    const auto p = random_packed(rng);
    CHECK(Codec<Lamplighter>::decode(Codec<Lamplighter>::encode(p)) == p);
  }
  const auto bad = Json::parse(R"({"lamps":"Z2","entries":[[40,1]]})");
  CHECK_THROWS_AS(Codec<LampWindow>::decode(bad), SchemaError);
  const auto zero = Json::parse(R"({"lamps":"Z","entries":[[1,0]]})");
  CHECK_THROWS_AS(Codec<ZConfig>::decode(zero), SchemaError);
  const auto cert = lamplighter_reiter(2);
  const auto back = folner::reiter_certificate_from_json<Lamplighter>(folner::reiter_certificate_to_json(cert));
  CHECK(back.mu.points == cert.mu.points);
  CHECK(back.mu.mass == cert.mu.mass);
  CHECK(back.epsilon == cert.epsilon);
}
