#include "skewcert/wreath/reiter.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace skewcert {

Rational lamplighter_epsilon(int n) {
  const BigInt w(2 * n + 1);
  BigInt top = 1;
  top <<= static_cast<unsigned>(2 * n + 1);
  return Rational(top - 1, top * w);
}

Rational lamplighter_shift_defect(int n) { return Rational(2) * lamplighter_epsilon(n); }

folner::ReiterCertificate<Lamplighter> lamplighter_reiter(int n) {
  if (n < 1 || n > 11) throw std::invalid_argument("lamplighter_reiter supports 1 <= n <= 11");
  const std::int64_t w = 2 * n;
  // A configuration with lowest lamp a and highest b lies in box [-j, 2n-j]
  // for j in [max(0, -a), min(2n, 2n-b)].
  auto boxes = [w](std::int64_t a, std::int64_t b) {
    return std::min(w, w - b) - std::max<std::int64_t>(0, -a) + 1;
  };
  std::vector<std::uint64_t> keys{0};
  for (std::int64_t a = -w; a <= w; ++a) {
    for (std::int64_t b = a; b <= w && b - a <= w; ++b) {
      if (boxes(a, b) <= 0) continue;
      const std::uint64_t ends = LampWindow::single(a).bits | LampWindow::single(b).bits;
      const std::int64_t inner = std::max<std::int64_t>(0, b - a - 1);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << inner); ++m) {
        keys.push_back(ends | (m << (a + 1 + LampWindow::kOffset)));
      }
    }
  }
  std::sort(keys.begin(), keys.end());

  folner::ReiterCertificate<Lamplighter> cert;
  cert.action = "lamplighter";
  cert.elements = {"L", "T"};
  cert.epsilon = lamplighter_epsilon(n);
  auto& mu = cert.mu;
  mu.denominator = BigInt(static_cast<unsigned long>(w + 1)) << static_cast<unsigned>(w + 1);
  mu.points.reserve(keys.size());
  mu.mass.reserve(keys.size());
  for (auto k : keys) {
    mu.points.push_back({k});
    if (k == 0) {
      mu.mass.push_back(static_cast<std::uint64_t>(w + 1));
    } else {
      const std::int64_t a = std::countr_zero(k) - LampWindow::kOffset;
      const std::int64_t b = 63 - std::countl_zero(k) - LampWindow::kOffset;
      mu.mass.push_back(static_cast<std::uint64_t>(boxes(a, b)));
    }
  }
  return cert;
}

}  // namespace skewcert
