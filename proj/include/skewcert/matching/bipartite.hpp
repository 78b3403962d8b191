#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewcert::matching {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Matching on an index-based graph: mate_left[u] is the matched right vertex
/// or -1; deficient[u] marks the Ore witness S (left vertices reachable by
/// alternating paths from free left vertices).
struct MatchingResult {
  std::size_t size = 0;
  std::vector<std::int64_t> mate_left;
  std::vector<bool> deficient;
};

/// Hopcroft-Karp. Deterministic: neighbours are scanned in adjacency order.
MatchingResult hopcroft_karp(std::size_t n_right, const Adjacency& adj);

/// Bipartite graph with opaque string ids.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  /// Throws std::invalid_argument on unknown endpoints, duplicate ids or
  /// duplicate edges.
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  const Adjacency& adjacency() const { return adj_; }
  std::vector<std::pair<std::string, std::string>> edges() const;

  std::optional<std::uint32_t> left_index(const std::string& id) const;
  std::optional<std::uint32_t> right_index(const std::string& id) const;
  bool has_edge(std::uint32_t u, std::uint32_t v) const;

 private:
  std::vector<std::string> left_, right_;
  std::unordered_map<std::string, std::uint32_t> left_index_, right_index_;
  Adjacency adj_;
};

struct MatchingCertificate {
  std::size_t size = 0;
  std::vector<std::pair<std::string, std::string>> matching;
  std::vector<std::string> deficiency_set;

  friend bool operator==(const MatchingCertificate&, const MatchingCertificate&) = default;
};

MatchingCertificate max_matching(const BipartiteGraph& g);

/// |left| - max over S of (|S| - |N(S)|), by enumerating all subsets.
/// Requires |left| <= 22; throws std::invalid_argument otherwise.
std::size_t ore_defect_bruteforce(const BipartiteGraph& g);

/// |N(S)| for a set of left indices.
std::size_t neighbourhood_size(const Adjacency& adj, const std::vector<std::uint32_t>& S);

struct MatchingVerdict {
  enum class Reason { Ok, UnknownVertex, NonEdge, NotInjective, DuplicateInSet, OreIdentity, SizeMismatch };
  Reason reason = Reason::Ok;
  std::string detail;
  bool accepted() const { return reason == Reason::Ok; }
};

const char* reason_name(MatchingVerdict::Reason reason);

MatchingVerdict verify_matching_certificate(const BipartiteGraph& g, const MatchingCertificate& cert);

}  // namespace skewcert::matching
