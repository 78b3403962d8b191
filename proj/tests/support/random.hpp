#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewcert/exact/dyadic.hpp"
#include "skewcert/exact/projective.hpp"
#include "skewcert/exact/rational.hpp"

namespace skewcert::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline Dyadic random_dyadic(Rng& rng, std::int64_t span = 1000, std::uint32_t max_exp = 12) {
  return Dyadic(BigInt(static_cast<long>(uniform(rng, -span, span))),
                static_cast<std::uint32_t>(uniform(rng, 0, max_exp)));
}

/// Dyadic strictly inside (0,1).
inline Dyadic random_unit_dyadic(Rng& rng, std::uint32_t max_exp = 14) {
  const auto e = static_cast<std::uint32_t>(uniform(rng, 1, max_exp));
  const auto top = (std::int64_t{1} << e) - 1;
  return Dyadic(BigInt(static_cast<long>(uniform(rng, 1, top))), e);
}

inline Rational random_rational(Rng& rng, std::int64_t span = 50, std::int64_t max_den = 12) {
  return Rational(BigInt(static_cast<long>(uniform(rng, -span, span))),
                  BigInt(static_cast<long>(uniform(rng, 1, max_den))));
}

inline std::string random_word(Rng& rng, std::size_t max_len, const std::string& letters = "ABab") {
  const auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(max_len)));
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letters[static_cast<std::size_t>(uniform(rng, 0, letters.size() - 1))]);
  return w;
}

/// Strictly increasing sorted sample of distinct values.
template <class T, class Gen>
std::vector<T> increasing_sample(Rng& rng, std::size_t n, Gen gen) {
  std::vector<T> out;
  while (out.size() < n) {
    T v = gen(rng);
    bool dup = false;
    for (const auto& w : out) dup = dup || w == v;
    if (!dup) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skewcert::testing
