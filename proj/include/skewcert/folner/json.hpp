#pragma once

#include <string>

#include "skewcert/folner/certificates.hpp"
#include "skewcert/monod/json.hpp"
#include "skewcert/thompson/json.hpp"
#include "skewcert/wreath/json.hpp"
#include "skewcert/wreath/lamplighter.hpp"

namespace skewcert {

/// Packed lamps share the configuration encoding with Z2 lamps on Z.
template <>
struct Codec<LampWindow> {
  static Json encode(const LampWindow& w) { return Codec<Config<std::int64_t>>::encode(to_config(w)); }
  static LampWindow decode(const Json& j) {
    try {
      return to_window(Codec<Config<std::int64_t>>::decode(j, LampGroup::Z2));
    } catch (const std::out_of_range&) {
      throw SchemaError("field 'entries': lamp outside the packed window [-32, 31]");
    } catch (const std::invalid_argument&) {
      throw SchemaError("field 'lamps': packed lamps must be Z2");
    }
  }
};

template <>
struct Codec<Lamplighter> {
  static Json encode(const Lamplighter& g) {
    return Json{{"config", Codec<LampWindow>::encode({g.lamps})}, {"element", Json{{"shift", g.shift}}}};
  }
  static Lamplighter decode(const Json& j) {
    return {Codec<LampWindow>::decode(require_field(j, "config")).bits,
            Codec<IntShift>::decode(require_field(j, "element")).amount};
  }
};

namespace folner {

namespace detail {

inline std::vector<std::string> words_from_json(const Json& j, const char* key) {
  const Json& arr = require_field(j, key);
  if (!arr.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array of words");
  std::vector<std::string> out;
  for (const auto& e : arr) {
    if (!e.is_string()) throw SchemaError(std::string("field '") + key + "' must be an array of words");
    out.push_back(e.get<std::string>());
  }
  return out;
}

template <class T>
std::vector<T> list_from_json(const Json& j, const char* key) {
  const Json& arr = require_field(j, key);
  if (!arr.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  std::vector<T> out;
  for (const auto& e : arr) out.push_back(Codec<T>::decode(e));
  return out;
}

}  // namespace detail

/// The "action" (or "group") name of a certificate, for dispatch.
inline std::string document_name(const Json& j, const char* key) { return require_string(j, key); }

template <GroupAction G>
Json set_certificate_to_json(const SetFolnerCertificate<G>& c) {
  using P = typename GroupTraits<G>::point_type;
  Json T = Json::array();
  for (const auto& p : c.T) T.push_back({{"point", Codec<std::vector<P>>::encode(p.point)}, {"word", p.word}});
  return Json{{"schema", "folner-set/1"}, {"action", c.action},
              {"base", Codec<std::vector<P>>::encode(c.base)}, {"elements", c.elements},
              {"theta", to_json(c.theta)}, {"T", T},
              {"per_g", c.per_g}};
}

template <GroupAction G>
SetFolnerCertificate<G> set_certificate_from_json(const Json& j) {
  using P = typename GroupTraits<G>::point_type;
  check_schema_tag(j, "folner-set/1", true);
  SetFolnerCertificate<G> c;
  c.action = require_string(j, "action");
  c.base = Codec<std::vector<P>>::decode(require_field(j, "base"));
  c.elements = detail::words_from_json(j, "elements");
  c.theta = rational_from_json(require_field(j, "theta"));
  const Json& T = require_field(j, "T");
  if (!T.is_array()) throw SchemaError("field 'T' must be an array");
  for (const auto& e : T) {
    c.T.push_back({Codec<std::vector<P>>::decode(require_field(e, "point")), require_string(e, "word")});
  }
  const Json& per_g = require_field(j, "per_g");
  if (!per_g.is_array()) throw SchemaError("field 'per_g' must be an array");
  for (const auto& e : per_g) {
    if (!e.is_number_unsigned()) throw SchemaError("field 'per_g' must hold non-negative integers");
    c.per_g.push_back(e.get<std::size_t>());
  }
  return c;
}

template <GroupAction G>
Json reiter_certificate_to_json(const ReiterCertificate<G>& c) {
  using P = typename GroupTraits<G>::point_type;
  Json support = Json::array();
  for (std::size_t i = 0; i < c.mu.size(); ++i) support.push_back(Json::array({Codec<P>::encode(c.mu.points[i]), c.mu.mass[i]}));
  return Json{{"schema", "reiter/1"}, {"action", c.action}, {"elements", c.elements},
              {"epsilon", to_json(c.epsilon)}, {"denominator", bigint_to_json(c.mu.denominator)},
              {"support", std::move(support)}};
}

template <GroupAction G>
ReiterCertificate<G> reiter_certificate_from_json(const Json& j) {
  using P = typename GroupTraits<G>::point_type;
  check_schema_tag(j, "reiter/1", true);
  ReiterCertificate<G> c;
  c.action = require_string(j, "action");
  c.elements = detail::words_from_json(j, "elements");
  c.epsilon = rational_from_json(require_field(j, "epsilon"));
  c.mu.denominator = bigint_from_json(j, "denominator");
  const Json& support = require_field(j, "support");
  if (!support.is_array()) throw SchemaError("field 'support' must be an array");
  for (const auto& e : support) {
    if (!e.is_array() || e.size() != 2 || !e[1].is_number_unsigned()) {
      throw SchemaError("field 'support': each entry must be [point, mass]");
    }
    c.mu.points.push_back(Codec<P>::decode(e[0]));
    c.mu.mass.push_back(e[1].get<std::uint64_t>());
  }
  return c;
}

template <GroupAction G>
Json simulation_to_json(const std::string& group, const SimulationWitness<G>& w) {
  using P = typename GroupTraits<G>::point_type;
  Json pairs = Json::array();
  for (const auto& [g, h] : w.pairs) pairs.push_back({{"g", Codec<G>::encode(g)}, {"h", Codec<G>::encode(h)}});
  return Json{{"schema", "simulation/1"}, {"group", group}, {"pairs", std::move(pairs)},
              {"S", Codec<std::vector<G>>::encode(w.S)}, {"t", Codec<G>::encode(w.t)},
              {"P", Codec<std::vector<P>>::encode(w.P)}};
}

template <GroupAction G>
SimulationWitness<G> simulation_from_json(const Json& j) {
  using P = typename GroupTraits<G>::point_type;
  check_schema_tag(j, "simulation/1", true);
  SimulationWitness<G> w;
  const Json& pairs = require_field(j, "pairs");
  if (!pairs.is_array()) throw SchemaError("field 'pairs' must be an array");
  for (const auto& e : pairs) w.pairs.emplace_back(Codec<G>::decode(require_field(e, "g")), Codec<G>::decode(require_field(e, "h")));
  w.S = detail::list_from_json<G>(j, "S");
  w.t = Codec<G>::decode(require_field(j, "t"));
  w.P = detail::list_from_json<P>(j, "P");
  return w;
}

template <GroupAction G>
Json approximation_to_json(const std::string& group, const ApproximationWitness<G>& w) {
  using P = typename GroupTraits<G>::point_type;
  return Json{{"schema", "approximation/1"}, {"group", group}, {"g", Codec<G>::encode(w.g)},
              {"h", Codec<G>::encode(w.h)}, {"A", Codec<std::vector<P>>::encode(w.A)}};
}

template <GroupAction G>
ApproximationWitness<G> approximation_from_json(const Json& j) {
  using P = typename GroupTraits<G>::point_type;
  check_schema_tag(j, "approximation/1", true);
  return {Codec<G>::decode(require_field(j, "g")), Codec<G>::decode(require_field(j, "h")),
          detail::list_from_json<P>(j, "A")};
}

}  // namespace folner
}  // namespace skewcert
