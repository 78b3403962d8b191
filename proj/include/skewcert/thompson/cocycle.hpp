#pragma once

#include <optional>

#include "skewcert/thompson/pl_map.hpp"
#include "skewcert/wreath/config.hpp"
#include "skewcert/wreath/semidirect.hpp"

namespace skewcert::thompson {

/// A finitely supported D -> Z function.
using IntConfig = Config<Dyadic>;
using WreathF = SemidirectElem<PLMapUnit>;

/// The jump of log2-slopes at each point of D:
///   log2 g'+(x) - log2 g'-(x) inside, log2 g'+(0) at 0, -log2 g'-(1) at 1.
IntConfig eta(const PLMapUnit& g);

/// g -> (eta(g^-1), g), a homomorphism into Z^(D) x| F.
WreathF iota(const PLMapUnit& g);

/// The twisted action (g, f) -> g.f + eta(g^-1).
IntConfig beta_apply(const PLMapUnit& g, const IntConfig& f);

/// The point where beta_g moves every configuration: the least x with
/// eta(g)(x) != 0. Absent exactly for the identity.
std::optional<Dyadic> freeness_witness(const PLMapUnit& g);

}  // namespace skewcert::thompson
