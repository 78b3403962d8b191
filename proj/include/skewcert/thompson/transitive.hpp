#pragma once

#include <span>

#include "skewcert/thompson/pl_map.hpp"

namespace skewcert::thompson {

/// Some g in F with g(xs[i]) = ys[i]. Both tuples must be strictly increasing
/// inside (0,1) and of equal length; throws std::invalid_argument otherwise.
PLMapUnit strong_transitive_F(std::span<const Dyadic> xs, std::span<const Dyadic> ys);

}  // namespace skewcert::thompson
