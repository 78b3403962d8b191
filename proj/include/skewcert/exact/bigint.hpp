#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace skewcert {

using BigInt = mpz_class;

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

inline std::string to_string(const BigInt& value) { return value.get_str(); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline int sign(const BigInt& value) { return sgn(value); }

}  // namespace skewcert
