#include "skewcert/thompson/transitive.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewcert::thompson {
namespace {

struct Interval {
  Dyadic start;
  long log_length;  // length is 2^log_length
};

void check_tuple(std::span<const Dyadic> pts, const char* name) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].sign() <= 0 || pts[i] >= Dyadic(1)) {
      throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
    }
    if (i > 0 && !(pts[i - 1] < pts[i])) {
      throw std::invalid_argument(std::string(name) + " must be strictly increasing");
    }
  }
}

// Greedy cover of [a, b] by standard dyadic intervals [k/2^m, (k+1)/2^m].
std::vector<Interval> standard_cover(const Dyadic& a, const Dyadic& b) {
  std::vector<Interval> out;
  Dyadic cur = a;
  while (cur < b) {
    long log_len = cur.sign() == 0 ? 0 : -static_cast<long>(cur.exp());
    while (cur + Dyadic::pow2(static_cast<int>(log_len)) > b) --log_len;
    out.push_back({cur, log_len});
    cur += Dyadic::pow2(static_cast<int>(log_len));
  }
  return out;
}

// Bisects the longest interval (leftmost on ties) until the cover has `count`
// pieces; halves of standard intervals are standard.
void refine_to(std::vector<Interval>& cover, std::size_t count) {
  while (cover.size() < count) {
    auto it = std::max_element(cover.begin(), cover.end(), [](const Interval& l, const Interval& r) {
      return l.log_length < r.log_length;
    });
    const long half = it->log_length - 1;
    Interval right{it->start + Dyadic::pow2(static_cast<int>(half)), half};
    it->log_length = half;
    cover.insert(it + 1, right);
  }
}

}  // namespace

PLMapUnit strong_transitive_F(std::span<const Dyadic> xs, std::span<const Dyadic> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("xs and ys must have equal length");
  check_tuple(xs, "xs");
  check_tuple(ys, "ys");

  std::vector<Dyadic> src{Dyadic(0)};
  std::vector<Dyadic> dst{Dyadic(0)};
  src.insert(src.end(), xs.begin(), xs.end());
  dst.insert(dst.end(), ys.begin(), ys.end());
  src.emplace_back(1);
  dst.emplace_back(1);

  std::vector<Breakpoint> points;
  for (std::size_t seg = 0; seg + 1 < src.size(); ++seg) {
    auto from = standard_cover(src[seg], src[seg + 1]);
    auto to = standard_cover(dst[seg], dst[seg + 1]);
    const auto count = std::max(from.size(), to.size());
    refine_to(from, count);
    refine_to(to, count);
    for (std::size_t i = 0; i < count; ++i) points.push_back({from[i].start, to[i].start});
  }
  points.push_back({1, 1});
  return PLMapUnit::from_breakpoints(std::move(points));
}

}  // namespace skewcert::thompson
