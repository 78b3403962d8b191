#include "skewcert/monod/json.hpp"

namespace skewcert {

namespace monod {

PPRaw pp_raw_from_json(const Json& j) {
  check_schema_tag(j, "pp/1", false);
  const Json& cuts = require_field(j, "cuts");
  const Json& pieces = require_field(j, "pieces");
  if (!cuts.is_array()) throw SchemaError("field 'cuts' must be an array");
  if (!pieces.is_array()) throw SchemaError("field 'pieces' must be an array");
  PPRaw raw;
  for (const auto& c : cuts) raw.cuts.push_back({bigint_from_json(c, "p"), bigint_from_json(c, "q")});
  for (const auto& m : pieces) {
    raw.pieces.push_back(
        {bigint_from_json(m, "a"), bigint_from_json(m, "b"), bigint_from_json(m, "c"), bigint_from_json(m, "d")});
  }
  return raw;
}

}  // namespace monod

Json Codec<monod::PPElement>::encode(const monod::PPElement& h) {
  return Json{{"cuts", Codec<std::vector<ProjPoint>>::encode(h.cuts())},
              {"pieces", Codec<std::vector<Mobius>>::encode(h.pieces())}};
}

monod::PPElement Codec<monod::PPElement>::decode(const Json& j) {
  auto result = monod::pp_validate(monod::pp_raw_from_json(j));
  if (auto* problem = std::get_if<monod::PPDiagnostic>(&result)) {
    throw SchemaError(std::string("invalid element (") + monod::diagnostic_name(problem->kind) +
                      "): " + problem->message);
  }
  return std::get<monod::PPElement>(std::move(result));
}

}  // namespace skewcert
