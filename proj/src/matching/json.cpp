#include "skewcert/matching/json.hpp"

namespace skewcert {

namespace {

std::vector<std::string> string_list(const Json& j, const char* key) {
  const Json& arr = require_field(j, key);
  if (!arr.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw SchemaError(std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const Json& j, const char* key) {
  const Json& arr = require_field(j, key);
  if (!arr.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw SchemaError(std::string("field '") + key + "': each entry must be [left, right]");
    }
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

Json encode_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  Json arr = Json::array();
  for (const auto& [l, r] : pairs) arr.push_back(Json::array({l, r}));
  return arr;
}

}  // namespace

Json Codec<matching::BipartiteGraph>::encode(const matching::BipartiteGraph& g) {
  return Json{{"left", g.left()}, {"right", g.right()}, {"edges", encode_pairs(g.edges())}};
}

matching::BipartiteGraph Codec<matching::BipartiteGraph>::decode(const Json& j) {
  check_schema_tag(j, "graph/1", false);
  try {
    return matching::BipartiteGraph(string_list(j, "left"), string_list(j, "right"), pair_list(j, "edges"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("field 'edges': ") + e.what());
  }
}

Json Codec<matching::MatchingCertificate>::encode(const matching::MatchingCertificate& c) {
  return Json{{"size", c.size}, {"matching", encode_pairs(c.matching)}, {"deficiency_set", c.deficiency_set}};
}

matching::MatchingCertificate Codec<matching::MatchingCertificate>::decode(const Json& j) {
  check_schema_tag(j, "matching/1", false);
  const Json& size = require_field(j, "size");
  if (!size.is_number_unsigned()) throw SchemaError("field 'size' must be a non-negative integer");
  return {size.get<std::size_t>(), pair_list(j, "matching"), string_list(j, "deficiency_set")};
}

}  // namespace skewcert
