#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "random.hpp"
#include "skewcert/matching/bipartite.hpp"

namespace skewcert::testing {

using matching::BipartiteGraph;

inline std::vector<std::string> ids(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i + 1));
  return out;
}

inline BipartiteGraph from_mask(std::size_t nl, std::size_t nr, std::uint64_t mask) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t u = 0; u < nl; ++u) {
    for (std::size_t v = 0; v < nr; ++v) {
      if (mask >> (u * nr + v) & 1) edges.emplace_back("e" + std::to_string(u + 1), "f" + std::to_string(v + 1));
    }
  }
  return BipartiteGraph(ids("e", nl), ids("f", nr), edges);
}

inline BipartiteGraph random_graph(Rng& rng, std::size_t max_side = 8) {
  const auto nl = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_side)));
  const auto nr = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_side)));
  const auto density = uniform(rng, 0, 100);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t u = 0; u < nl; ++u) {
    for (std::size_t v = 0; v < nr; ++v) {
      if (uniform(rng, 0, 99) < density) {
        edges.emplace_back("e" + std::to_string(u + 1), "f" + std::to_string(v + 1));
      }
    }
  }
  return BipartiteGraph(ids("e", nl), ids("f", nr), edges);
}

// Oracle: largest injective edge-respecting partial map, by exhaustive search.
inline std::size_t best_injection(const BipartiteGraph& g, std::size_t u = 0, std::uint64_t used = 0) {
  if (u == g.left().size()) return 0;
  std::size_t best = best_injection(g, u + 1, used);
  for (auto v : g.adjacency()[u]) {
    if (!(used >> v & 1)) best = std::max(best, 1 + best_injection(g, u + 1, used | (std::uint64_t{1} << v)));
  }
  return best;
}

}  // namespace skewcert::testing
