#include "skewcert/thompson/json.hpp"

namespace skewcert {
namespace {

Json encode_points(const std::vector<thompson::Breakpoint>& points) {
  Json arr = Json::array();
  for (const auto& p : points) arr.push_back(Json::array({to_json(p.x), to_json(p.y)}));
  return arr;
}

std::vector<thompson::Breakpoint> decode_points(const Json& j) {
  const Json& arr = require_field(j, "breakpoints");
  if (!arr.is_array()) throw SchemaError("field 'breakpoints' must be an array");
  std::vector<thompson::Breakpoint> points;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2) throw SchemaError("field 'breakpoints': each entry must be [x, y]");
    points.push_back({dyadic_from_json(e[0]), dyadic_from_json(e[1])});
  }
  return points;
}

std::int64_t decode_tail(const Json& j, const char* key) {
  const Json& v = require_field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

}  // namespace

Json Codec<thompson::PLMapUnit>::encode(const thompson::PLMapUnit& f) {
  return Json{{"breakpoints", encode_points(f.breakpoints())}};
}

thompson::PLMapUnit Codec<thompson::PLMapUnit>::decode(const Json& j) {
  check_schema_tag(j, "pl-unit/1", false);
  auto points = decode_points(j);
  if (auto problem = thompson::PLMapUnit::diagnose(points)) throw SchemaError("field 'breakpoints': " + *problem);
  return thompson::PLMapUnit::from_breakpoints(std::move(points));
}

Json Codec<thompson::PLMapLine>::encode(const thompson::PLMapLine& f) {
  return Json{{"breakpoints", encode_points(f.breakpoints())},
              {"left_tail", f.left_tail()},
              {"right_tail", f.right_tail()}};
}

thompson::PLMapLine Codec<thompson::PLMapLine>::decode(const Json& j) {
  check_schema_tag(j, "pl-line/1", false);
  auto points = decode_points(j);
  const auto left = decode_tail(j, "left_tail");
  const auto right = decode_tail(j, "right_tail");
  if (auto problem = thompson::PLMapLine::diagnose(points, left, right)) {
    throw SchemaError("field 'breakpoints': " + *problem);
  }
  return thompson::PLMapLine::from_parts(std::move(points), left, right);
}

}  // namespace skewcert
