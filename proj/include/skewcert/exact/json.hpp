#pragma once

#include "skewcert/exact/dyadic.hpp"
#include "skewcert/exact/projective.hpp"
#include "skewcert/exact/rational.hpp"
#include "skewcert/schema.hpp"

namespace skewcert {

Json bigint_to_json(const BigInt& value);
/// Accepts a decimal string or a JSON integer.
BigInt bigint_from_json(const Json& doc, const char* field);

Json to_json(const Dyadic& x);
Json to_json(const Rational& x);
Json to_json(const ProjPoint& x);
Json to_json(const Mobius& m);

Dyadic dyadic_from_json(const Json& doc);
Rational rational_from_json(const Json& doc);
ProjPoint proj_point_from_json(const Json& doc);
Mobius mobius_from_json(const Json& doc);

}  // namespace skewcert
