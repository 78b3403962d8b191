#include "skewcert/matching/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace skewcert::matching {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

struct HopcroftKarp {
  const Adjacency& adj;
  std::vector<std::int64_t> mate_l, mate_r;
  std::vector<std::uint32_t> dist;
  std::vector<std::size_t> next;

  HopcroftKarp(std::size_t n_right, const Adjacency& a)
      : adj(a), mate_l(a.size(), -1), mate_r(n_right, -1), dist(a.size()), next(a.size()) {}

  bool bfs() {
    std::deque<std::uint32_t> queue;
    for (std::uint32_t u = 0; u < adj.size(); ++u) {
      dist[u] = mate_l[u] < 0 ? 0 : kInf;
      if (mate_l[u] < 0) queue.push_back(u);
    }
    bool found = false;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : adj[u]) {
        const auto w = mate_r[v];
        if (w < 0) {
          found = true;
        } else if (dist[static_cast<std::size_t>(w)] == kInf) {
          dist[static_cast<std::size_t>(w)] = dist[u] + 1;
          queue.push_back(static_cast<std::uint32_t>(w));
        }
      }
    }
    return found;
  }

  // Iterative DFS along the layered graph.
  bool augment(std::uint32_t root) {
    std::vector<std::uint32_t> stack{root};
    std::vector<std::uint32_t> via;  // right vertex used to leave stack[i]
    while (!stack.empty()) {
      const auto u = stack.back();
      bool advanced = false;
      while (next[u] < adj[u].size()) {
        const auto v = adj[u][next[u]++];
        const auto w = mate_r[v];
        if (w < 0) {
          via.push_back(v);
          for (std::size_t i = 0; i < stack.size(); ++i) {
            mate_l[stack[i]] = via[i];
            mate_r[via[i]] = stack[i];
          }
          return true;
        }
        const auto wu = static_cast<std::uint32_t>(w);
        if (dist[wu] == dist[u] + 1) {
          via.push_back(v);
          stack.push_back(wu);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[u] = kInf;
        stack.pop_back();
        if (!via.empty()) via.pop_back();
      }
    }
    return false;
  }
};

}  // namespace

MatchingResult hopcroft_karp(std::size_t n_right, const Adjacency& adj) {
  HopcroftKarp hk(n_right, adj);
  std::size_t size = 0;
  while (hk.bfs()) {
    std::fill(hk.next.begin(), hk.next.end(), 0);
    for (std::uint32_t u = 0; u < adj.size(); ++u) {
      if (hk.mate_l[u] < 0 && hk.augment(u)) ++size;
    }
  }
  MatchingResult out;
  out.size = size;
  out.deficient.assign(adj.size(), false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    if (hk.mate_l[u] < 0) {
      out.deficient[u] = true;
      queue.push_back(u);
    }
  }
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    for (auto v : adj[u]) {
      const auto w = hk.mate_r[v];
      if (w >= 0 && !out.deficient[static_cast<std::size_t>(w)]) {
        out.deficient[static_cast<std::size_t>(w)] = true;
        queue.push_back(static_cast<std::uint32_t>(w));
      }
    }
  }
  out.mate_left = std::move(hk.mate_l);
  return out;
}

BipartiteGraph::BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                               const std::vector<std::pair<std::string, std::string>>& edges)
    : left_(std::move(left)), right_(std::move(right)), adj_(left_.size()) {
  for (std::uint32_t i = 0; i < left_.size(); ++i) {
    if (!left_index_.emplace(left_[i], i).second) throw std::invalid_argument("duplicate left vertex '" + left_[i] + "'");
  }
  for (std::uint32_t i = 0; i < right_.size(); ++i) {
    if (!right_index_.emplace(right_[i], i).second) {
      throw std::invalid_argument("duplicate right vertex '" + right_[i] + "'");
    }
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [l, r] : edges) {
    const auto u = left_index(l);
    const auto v = right_index(r);
    if (!u) throw std::invalid_argument("edge endpoint '" + l + "' is not a left vertex");
    if (!v) throw std::invalid_argument("edge endpoint '" + r + "' is not a right vertex");
    if (!seen.emplace(*u, *v).second) throw std::invalid_argument("duplicate edge (" + l + ", " + r + ")");
    adj_[*u].push_back(*v);
  }
}

std::vector<std::pair<std::string, std::string>> BipartiteGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (auto v : adj_[u]) out.emplace_back(left_[u], right_[v]);
  }
  return out;
}

std::optional<std::uint32_t> BipartiteGraph::left_index(const std::string& id) const {
  auto it = left_index_.find(id);
  if (it == left_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::uint32_t> BipartiteGraph::right_index(const std::string& id) const {
  auto it = right_index_.find(id);
  if (it == right_index_.end()) return std::nullopt;
  return it->second;
}

bool BipartiteGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  const auto& row = adj_[u];
  return std::find(row.begin(), row.end(), v) != row.end();
}

MatchingCertificate max_matching(const BipartiteGraph& g) {
  const auto result = hopcroft_karp(g.right().size(), g.adjacency());
  MatchingCertificate cert;
  cert.size = result.size;
  for (std::size_t u = 0; u < g.left().size(); ++u) {
    if (result.mate_left[u] >= 0) {
      cert.matching.emplace_back(g.left()[u], g.right()[static_cast<std::size_t>(result.mate_left[u])]);
    }
    if (result.deficient[u]) cert.deficiency_set.push_back(g.left()[u]);
  }
  return cert;
}

std::size_t ore_defect_bruteforce(const BipartiteGraph& g) {
  const std::size_t n = g.left().size();
  if (n > 22) throw std::invalid_argument("ore_defect_bruteforce supports at most 22 left vertices");
  const std::size_t m = g.right().size();
  const std::size_t words = (m + 63) / 64;
  // Neighbourhood bitsets, built subset by subset from the lowest set bit.
  std::vector<std::uint64_t> nb(words << n, 0);
  std::size_t best = 0;
  for (std::size_t S = 1; S < (std::size_t{1} << n); ++S) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(S));
    const std::size_t rest = S & (S - 1);
    std::uint64_t* cur = &nb[S * words];
    const std::uint64_t* prev = &nb[rest * words];
    for (std::size_t w = 0; w < words; ++w) cur[w] = prev[w];
    for (auto v : g.adjacency()[low]) cur[v / 64] |= std::uint64_t{1} << (v % 64);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words; ++w) count += static_cast<std::size_t>(__builtin_popcountll(cur[w]));
    const auto size = static_cast<std::size_t>(__builtin_popcountll(S));
    if (size > count) best = std::max(best, size - count);
  }
  return n - best;
}

std::size_t neighbourhood_size(const Adjacency& adj, const std::vector<std::uint32_t>& S) {
  std::set<std::uint32_t> nbrs;
  for (auto u : S) nbrs.insert(adj[u].begin(), adj[u].end());
  return nbrs.size();
}

const char* reason_name(MatchingVerdict::Reason reason) {
  switch (reason) {
    case MatchingVerdict::Reason::Ok: return "ok";
    case MatchingVerdict::Reason::UnknownVertex: return "unknown-vertex";
    case MatchingVerdict::Reason::NonEdge: return "non-edge";
    case MatchingVerdict::Reason::NotInjective: return "not-injective";
    case MatchingVerdict::Reason::DuplicateInSet: return "duplicate-in-deficiency-set";
    case MatchingVerdict::Reason::OreIdentity: return "ore-identity";
    case MatchingVerdict::Reason::SizeMismatch: return "size-mismatch";
  }
  return "unknown";
}

MatchingVerdict verify_matching_certificate(const BipartiteGraph& g, const MatchingCertificate& cert) {
  using R = MatchingVerdict::Reason;
  std::set<std::uint32_t> used_l, used_r;
  for (const auto& [l, r] : cert.matching) {
    const auto u = g.left_index(l);
    const auto v = g.right_index(r);
    if (!u || !v) return {R::UnknownVertex, "matched pair (" + l + ", " + r + ") names an unknown vertex"};
    if (!g.has_edge(*u, *v)) return {R::NonEdge, "(" + l + ", " + r + ") is not an edge"};
    if (!used_l.insert(*u).second) return {R::NotInjective, "left vertex '" + l + "' matched twice"};
    if (!used_r.insert(*v).second) return {R::NotInjective, "right vertex '" + r + "' matched twice"};
  }
  std::vector<std::uint32_t> S;
  std::set<std::uint32_t> seen;
  for (const auto& id : cert.deficiency_set) {
    const auto u = g.left_index(id);
    if (!u) return {R::UnknownVertex, "deficiency set names unknown vertex '" + id + "'"};
    if (!seen.insert(*u).second) return {R::DuplicateInSet, "'" + id + "' repeated in deficiency set"};
    S.push_back(*u);
  }
  const std::size_t nbrs = neighbourhood_size(g.adjacency(), S);
  const std::size_t n = g.left().size();
  // |S| - |N(S)| = |left| - size, in signed arithmetic.
  const auto lhs = static_cast<std::int64_t>(S.size()) - static_cast<std::int64_t>(nbrs);
  const auto rhs = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(cert.size);
  if (lhs != rhs) {
    return {R::OreIdentity, "|S| - |N(S)| = " + std::to_string(lhs) + " but |left| - size = " + std::to_string(rhs)};
  }
  if (cert.matching.size() != cert.size) {
    return {R::SizeMismatch, "stated size " + std::to_string(cert.size) + " but " +
                                 std::to_string(cert.matching.size()) + " pairs listed"};
  }
  return {};
}

}  // namespace skewcert::matching
