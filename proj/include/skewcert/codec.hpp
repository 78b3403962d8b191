#pragma once

#include <cstdint>
#include <vector>

#include "skewcert/action.hpp"
#include "skewcert/exact/json.hpp"
#include "skewcert/schema.hpp"

namespace skewcert {

/// JSON encoding for a value type: `static Json encode(const T&)` and
/// `static T decode(const Json&)` (throws SchemaError).
template <class T>
struct Codec;

template <>
struct Codec<Dyadic> {
  static Json encode(const Dyadic& x) { return to_json(x); }
  static Dyadic decode(const Json& j) { return dyadic_from_json(j); }
};

template <>
struct Codec<Rational> {
  static Json encode(const Rational& x) { return to_json(x); }
  static Rational decode(const Json& j) { return rational_from_json(j); }
};

template <>
struct Codec<ProjPoint> {
  static Json encode(const ProjPoint& x) { return to_json(x); }
  static ProjPoint decode(const Json& j) { return proj_point_from_json(j); }
};

template <>
struct Codec<Mobius> {
  static Json encode(const Mobius& m) { return to_json(m); }
  static Mobius decode(const Json& j) { return mobius_from_json(j); }
};

template <>
struct Codec<std::int64_t> {
  static Json encode(std::int64_t x) { return x; }
  static std::int64_t decode(const Json& j) {
    if (!j.is_number_integer()) throw SchemaError("expected an integer point");
    return j.get<std::int64_t>();
  }
};

template <>
struct Codec<IntShift> {
  static Json encode(const IntShift& g) { return Json{{"shift", g.amount}}; }
  static IntShift decode(const Json& j) {
    const Json& v = require_field(j, "shift");
    if (!v.is_number_integer()) throw SchemaError("field 'shift' must be an integer");
    return {v.get<std::int64_t>()};
  }
};

template <class T>
struct Codec<std::vector<T>> {
  static Json encode(const std::vector<T>& xs) {
    Json arr = Json::array();
    for (const auto& x : xs) arr.push_back(Codec<T>::encode(x));
    return arr;
  }
  static std::vector<T> decode(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected an array");
    std::vector<T> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(Codec<T>::decode(e));
    return out;
  }
};

}  // namespace skewcert
