#include "skewcert/exact/json.hpp"

#include <limits>

namespace skewcert {

const Json& require_field(const Json& doc, const char* key) {
  if (!doc.is_object()) throw SchemaError(std::string("expected an object holding '") + key + "'");
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const Json& doc, const char* key) {
  const Json& v = require_field(doc, key);
  if (!v.is_string()) throw SchemaError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

void check_schema_tag(const Json& doc, const std::string& expected, bool mandatory) {
  if (!doc.is_object()) throw SchemaError("document must be a JSON object");
  auto it = doc.find("schema");
  if (it == doc.end()) {
    if (mandatory) throw SchemaError("missing field 'schema' (expected \"" + expected + "\")");
    return;
  }
  if (!it->is_string() || it->get<std::string>() != expected) {
    throw SchemaError("field 'schema' must be \"" + expected + "\"");
  }
}

Json bigint_to_json(const BigInt& value) { return value.get_str(); }

BigInt bigint_from_json(const Json& doc, const char* field) {
  const Json& v = require_field(doc, field);
  try {
    if (v.is_string()) return parse_bigint(v.get<std::string>());
    if (v.is_number_integer()) {
      return v.is_number_unsigned() ? BigInt(std::to_string(v.get<std::uint64_t>()))
                                    : BigInt(std::to_string(v.get<std::int64_t>()));
    }
  } catch (const std::invalid_argument&) {
  }
  throw SchemaError(std::string("field '") + field + "' must be a decimal integer");
}

Json to_json(const Dyadic& x) { return Json{{"num", x.num().get_str()}, {"exp", x.exp()}}; }
Json to_json(const Rational& x) { return Json{{"num", x.num().get_str()}, {"den", x.den().get_str()}}; }
Json to_json(const ProjPoint& x) { return Json{{"p", x.p().get_str()}, {"q", x.q().get_str()}}; }

Json to_json(const Mobius& m) {
  return Json{{"a", m.a().get_str()}, {"b", m.b().get_str()}, {"c", m.c().get_str()}, {"d", m.d().get_str()}};
}

Dyadic dyadic_from_json(const Json& doc) {
  BigInt num = bigint_from_json(doc, "num");
  const Json& e = require_field(doc, "exp");
  if (!e.is_number_integer() || e.get<std::int64_t>() < 0 ||
      e.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max()) {
    throw SchemaError("field 'exp' must be a non-negative integer");
  }
  return Dyadic(std::move(num), static_cast<std::uint32_t>(e.get<std::int64_t>()));
}

Rational rational_from_json(const Json& doc) {
  BigInt num = bigint_from_json(doc, "num");
  BigInt den = bigint_from_json(doc, "den");
  if (den <= 0) throw SchemaError("field 'den' must be positive");
  return Rational(num, den);
}

ProjPoint proj_point_from_json(const Json& doc) {
  BigInt p = bigint_from_json(doc, "p");
  BigInt q = bigint_from_json(doc, "q");
  if (p == 0 && q == 0) throw SchemaError("field 'p'/'q': [0:0] is not a projective point");
  return ProjPoint(std::move(p), std::move(q));
}

Mobius mobius_from_json(const Json& doc) {
  BigInt a = bigint_from_json(doc, "a"), b = bigint_from_json(doc, "b");
  BigInt c = bigint_from_json(doc, "c"), d = bigint_from_json(doc, "d");
  if (a * d - b * c <= 0) throw SchemaError("field 'a'..'d': determinant must be positive");
  return Mobius(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace skewcert
