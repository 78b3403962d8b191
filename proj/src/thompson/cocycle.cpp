#include "skewcert/thompson/cocycle.hpp"

namespace skewcert::thompson {

IntConfig eta(const PLMapUnit& g) {
  IntConfig out(LampGroup::Z);
  const auto& points = g.breakpoints();
  const auto& slopes = g.log_slopes();
  out.add(points.front().x, slopes.front());
  for (std::size_t i = 1; i + 1 < points.size(); ++i) out.add(points[i].x, slopes[i] - slopes[i - 1]);
  out.add(points.back().x, -slopes.back());
  return out;
}

WreathF iota(const PLMapUnit& g) { return {eta(pl_inverse(g)), g}; }

IntConfig beta_apply(const PLMapUnit& g, const IntConfig& f) {
  return tau_apply(g, f) + eta(pl_inverse(g));
}

std::optional<Dyadic> freeness_witness(const PLMapUnit& g) {
  const IntConfig jumps = eta(g);
  if (jumps.empty()) return std::nullopt;
  return jumps.entries().begin()->first;
}

}  // namespace skewcert::thompson
