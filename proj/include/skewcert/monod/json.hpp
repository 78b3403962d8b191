#pragma once

#include "skewcert/codec.hpp"
#include "skewcert/monod/pp_element.hpp"

namespace skewcert {

namespace monod {
/// Reads {"cuts": [ProjPoint...], "pieces": [Mobius...]} without validating it.
PPRaw pp_raw_from_json(const Json& j);
}  // namespace monod

template <>
struct Codec<monod::PPElement> {
  static Json encode(const monod::PPElement& h);
  /// Validates; an invalid element is a SchemaError naming the diagnostic.
  static monod::PPElement decode(const Json& j);
};

}  // namespace skewcert
