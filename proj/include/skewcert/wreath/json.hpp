#pragma once

#include "skewcert/codec.hpp"
#include "skewcert/wreath/config.hpp"
#include "skewcert/wreath/semidirect.hpp"

namespace skewcert {

inline LampGroup lamp_group_from_json(const Json& doc, LampGroup fallback) {
  auto it = doc.find("lamps");
  if (it == doc.end()) return fallback;
  if (*it == "Z") return LampGroup::Z;
  if (*it == "Z2") return LampGroup::Z2;
  throw SchemaError("field 'lamps' must be \"Z\" or \"Z2\"");
}

/// {"lamps": "Z"|"Z2", "entries": [[point, value], ...]} sorted by point.
template <class Point>
struct Codec<Config<Point>> {
  static Json encode(const Config<Point>& f) {
    Json entries = Json::array();
    for (const auto& [x, v] : f.entries()) entries.push_back(Json::array({Codec<Point>::encode(x), v}));
    return Json{{"lamps", lamp_group_name(f.lamps())}, {"entries", std::move(entries)}};
  }
  static Config<Point> decode(const Json& j, LampGroup fallback = LampGroup::Z) {
    if (!j.is_object()) throw SchemaError("configuration must be an object");
    Config<Point> f(lamp_group_from_json(j, fallback));
    const Json& entries = require_field(j, "entries");
    if (!entries.is_array()) throw SchemaError("field 'entries' must be an array");
    for (const auto& e : entries) {
      if (!e.is_array() || e.size() != 2 || !e[1].is_number_integer()) {
        throw SchemaError("field 'entries': each entry must be [point, integer]");
      }
      const auto v = e[1].get<std::int64_t>();
      if (v == 0) throw SchemaError("field 'entries': zero values are not stored");
      if (f.lamps() == LampGroup::Z2 && v != 1) throw SchemaError("field 'entries': Z2 lamp values must be 1");
      Point x = Codec<Point>::decode(e[0]);
      if (f.at(x) != 0) throw SchemaError("field 'entries': duplicate point");
      f.add(x, v);
    }
    return f;
  }
};

template <GroupAction G>
struct Codec<SemidirectElem<G>> {
  static Json encode(const SemidirectElem<G>& e) {
    return Json{{"config", Codec<Config<typename GroupTraits<G>::point_type>>::encode(e.config)},
                {"element", Codec<G>::encode(e.g)}};
  }
  static SemidirectElem<G> decode(const Json& j) {
    return {Codec<Config<typename GroupTraits<G>::point_type>>::decode(require_field(j, "config")),
            Codec<G>::decode(require_field(j, "element"))};
  }
};

}  // namespace skewcert
