#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "skewcert/folner/action.hpp"
#include "skewcert/matching/bipartite.hpp"

namespace skewcert::folner {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An orbit point together with a word w such that point = w . base.
template <class Point>
struct OrbitPoint {
  Point point;
  std::string word;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

/// Breadth-first closure of {base} under the given letters, up to word length
/// radius. Points appear in BFS order; throws BudgetExceeded past max_points.
template <GroupAction G>
std::vector<OrbitPoint<typename NamedAction<G>::Point>> schreier_ball(const NamedAction<G>& action,
                                                                     const typename NamedAction<G>::Point& base,
                                                                     const std::string& letters, std::size_t radius,
                                                                     std::size_t max_points) {
  using Point = typename NamedAction<G>::Point;
  std::vector<OrbitPoint<Point>> out{{base, ""}};
  std::map<Point, std::size_t> seen{{base, 0}};
  std::size_t layer_begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (char c : letters) {
        Point q = NamedAction<G>::apply(action.generator(c), out[i].point);
        if (seen.contains(q)) continue;
        if (out.size() >= max_points) {
          throw BudgetExceeded("orbit ball exceeds " + std::to_string(max_points) + " points");
        }
        seen.emplace(q, out.size());
        out.push_back({std::move(q), std::string(1, c) + out[i].word});
      }
    }
    if (out.size() == layer_end) break;
    layer_begin = layer_end;
  }
  return out;
}

/// Matching number of the bipartite graph on T1 x T2 with an edge wherever
/// close(T1[i], T2[j]).
template <class Point, class Close>
std::size_t match_close(const std::vector<Point>& T1, const std::vector<Point>& T2, Close close) {
  matching::Adjacency adj(T1.size());
  for (std::size_t i = 0; i < T1.size(); ++i) {
    for (std::size_t j = 0; j < T2.size(); ++j) {
      if (close(T1[i], T2[j])) adj[i].push_back(static_cast<std::uint32_t>(j));
    }
  }
  return matching::hopcroft_karp(T2.size(), adj).size;
}

/// match_close under equality, with edges found by lookup instead of all pairs.
template <class Point>
std::size_t match_equal(const std::vector<Point>& T1, const std::vector<Point>& T2) {
  std::multimap<Point, std::uint32_t> index;
  for (std::size_t j = 0; j < T2.size(); ++j) index.emplace(T2[j], static_cast<std::uint32_t>(j));
  matching::Adjacency adj(T1.size());
  for (std::size_t i = 0; i < T1.size(); ++i) {
    auto [lo, hi] = index.equal_range(T1[i]);
    for (auto it = lo; it != hi; ++it) adj[i].push_back(it->second);
  }
  return matching::hopcroft_karp(T2.size(), adj).size;
}

}  // namespace skewcert::folner
