#pragma once

#include "skewcert/codec.hpp"
#include "skewcert/thompson/pl_map.hpp"
#include "skewcert/wreath/json.hpp"

namespace skewcert {

template <>
struct Codec<thompson::PLMapUnit> {
  static Json encode(const thompson::PLMapUnit& f);
  static thompson::PLMapUnit decode(const Json& j);
};

template <>
struct Codec<thompson::PLMapLine> {
  static Json encode(const thompson::PLMapLine& f);
  static thompson::PLMapLine decode(const Json& j);
};

}  // namespace skewcert
