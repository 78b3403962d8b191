#include <doctest.h>

#include <algorithm>

#include "../support/matching_gen.hpp"
#include "skewcert/matching/json.hpp"

using namespace skewcert;
using namespace skewcert::matching;
using skewcert::testing::Rng;
using skewcert::testing::best_injection;
using skewcert::testing::from_mask;
using skewcert::testing::ids;
using skewcert::testing::random_graph;

namespace {

std::vector<MatchingCertificate> single_field_mutations(const BipartiteGraph& g, const MatchingCertificate& c) {
  std::vector<MatchingCertificate> out;
  auto m = c;
  m.size = c.size + 1;
  out.push_back(m);
  if (c.size > 0) {
    m = c;
    m.size = c.size - 1;
    out.push_back(m);
    m = c;
    m.matching.pop_back();
    out.push_back(m);
    // Swap in a non-edge for the first pair, if there is one.
    const auto u = *g.left_index(c.matching[0].first);
    for (std::uint32_t v = 0; v < g.right().size(); ++v) {
      if (!g.has_edge(u, v)) {
        m = c;
        m.matching[0].second = g.right()[v];
        out.push_back(m);
        break;
      }
    }
    m = c;
    m.matching.push_back(c.matching[0]);
    out.push_back(m);
  }
  if (!c.deficiency_set.empty()) {
    m = c;
    m.deficiency_set.pop_back();
    // Dropping a vertex may leave a set that still satisfies the identity; only
    // count the mutation when it does not.
    std::vector<std::uint32_t> S;
    for (const auto& id : m.deficiency_set) S.push_back(*g.left_index(id));
    const auto lhs = static_cast<long>(S.size()) - static_cast<long>(neighbourhood_size(g.adjacency(), S));
    if (lhs != static_cast<long>(g.left().size()) - static_cast<long>(c.size)) out.push_back(m);
    m = c;
    m.deficiency_set.push_back(c.deficiency_set[0]);
    out.push_back(m);
  }
  m = c;
  m.deficiency_set.push_back("nobody");
  out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("examples") {
  const auto k23 = from_mask(2, 3, 0b111111);
  auto c = max_matching(k23);
  CHECK(c.size == 2);
  CHECK(c.deficiency_set.empty());
  CHECK(ore_defect_bruteforce(k23) == 2);

  const auto star = from_mask(3, 1, 0b111);
  c = max_matching(star);
  CHECK(c.size == 1);
  CHECK(c.deficiency_set == std::vector<std::string>{"e1", "e2", "e3"});
  CHECK(ore_defect_bruteforce(star) == 1);

  const auto empty = from_mask(3, 3, 0);
  c = max_matching(empty);
  CHECK(c.size == 0);
  CHECK(c.deficiency_set == empty.left());

  const BipartiteGraph none;
  CHECK(max_matching(none).size == 0);
  CHECK(verify_matching_certificate(none, max_matching(none)).accepted());
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(BipartiteGraph({"a"}, {"b"}, {{"a", "c"}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph({"a"}, {"b"}, {{"a", "b"}, {"a", "b"}}), std::invalid_argument);
  CHECK_THROWS_AS(BipartiteGraph({"a", "a"}, {"b"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(ore_defect_bruteforce(from_mask(23, 1, 0)), std::invalid_argument);
}

TEST_CASE("exhaustive small graphs") {
  for (std::size_t nl = 0; nl <= 4; ++nl) {
    for (std::size_t nr = 0; nr <= 4; ++nr) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (nl * nr)); ++mask) {
        const auto g = from_mask(nl, nr, mask);
        const auto c = max_matching(g);
        const auto brute = best_injection(g);
        REQUIRE(c.size == brute);
        REQUIRE(ore_defect_bruteforce(g) == brute);
        REQUIRE(verify_matching_certificate(g, c).accepted());
      }
    }
  }
}

TEST_CASE("random graphs") {
  Rng rng(91);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng);
    const auto c = max_matching(g);
    CHECK(c.size == best_injection(g));
    CHECK(c.size == ore_defect_bruteforce(g));
    CHECK(verify_matching_certificate(g, c).accepted());
    CHECK(max_matching(g) == c);
    for (const auto& m : single_field_mutations(g, c)) CHECK_FALSE(verify_matching_certificate(g, m).accepted());
  }
}

TEST_CASE("rejection reasons") {
  const auto k22 = from_mask(2, 2, 0b1001);  // e1-f1, e2-f2
  auto c = max_matching(k22);
  REQUIRE(c.size == 2);

  auto m = c;
  m.matching[0] = {"e1", "f2"};
  CHECK(verify_matching_certificate(k22, m).reason == MatchingVerdict::Reason::NonEdge);

  m = c;
  m.matching.pop_back();
  m.size = 1;
  CHECK(verify_matching_certificate(k22, m).reason == MatchingVerdict::Reason::OreIdentity);

  m = c;
  m.size = 1;
  CHECK(verify_matching_certificate(k22, m).reason == MatchingVerdict::Reason::OreIdentity);
}

TEST_CASE("larger graphs") {
  // A long path e_i - f_i - e_{i+1}: perfect matching needs the full augmenting structure.
  const std::size_t n = 2000;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (i + 1 < n) edges.emplace_back("e" + std::to_string(i + 2), "f" + std::to_string(i + 1));
    edges.emplace_back("e" + std::to_string(i + 1), "f" + std::to_string(i + 1));
  }
  const BipartiteGraph g(ids("e", n), ids("f", n), edges);
  const auto c = max_matching(g);
  CHECK(c.size == n);
  CHECK(verify_matching_certificate(g, c).accepted());
}

TEST_CASE("json round trip") {
  Rng rng(92);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(rng);
    const auto g2 = Codec<BipartiteGraph>::decode(Codec<BipartiteGraph>::encode(g));
    CHECK(g2.left() == g.left());
    CHECK(g2.edges() == g.edges());
    const auto c = max_matching(g);
    CHECK(Codec<MatchingCertificate>::decode(Codec<MatchingCertificate>::encode(c)) == c);
  }
  CHECK_THROWS_AS(Codec<BipartiteGraph>::decode(Json::parse(R"({"left":["a"],"right":[],"edges":[["a","x"]]})")),
                  SchemaError);
}
