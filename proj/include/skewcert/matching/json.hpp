#pragma once

#include "skewcert/codec.hpp"
#include "skewcert/matching/bipartite.hpp"

namespace skewcert {

template <>
struct Codec<matching::BipartiteGraph> {
  static Json encode(const matching::BipartiteGraph& g);
  static matching::BipartiteGraph decode(const Json& j);
};

template <>
struct Codec<matching::MatchingCertificate> {
  static Json encode(const matching::MatchingCertificate& c);
  static matching::MatchingCertificate decode(const Json& j);
};

}  // namespace skewcert
