#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "skewcert/exact/bigint.hpp"
#include "skewcert/exact/rational.hpp"

namespace skewcert {

/// A dyadic rational num / 2^exp, kept canonical: exp == 0 or num odd.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(long value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Dyadic(const BigInt& value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Dyadic(BigInt num, std::uint32_t exp);

  static Dyadic pow2(int k);

  const BigInt& num() const { return num_; }
  std::uint32_t exp() const { return exp_; }

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator-(const Dyadic& x, const Dyadic& y);
  friend Dyadic operator*(const Dyadic& x, const Dyadic& y);
  Dyadic& operator+=(const Dyadic& y) { return *this = *this + y; }
  Dyadic& operator-=(const Dyadic& y) { return *this = *this - y; }

  /// Multiplies by 2^k (k may be negative).
  Dyadic mul_pow2(long k) const;

  friend bool operator==(const Dyadic& x, const Dyadic& y) {
    return x.exp_ == y.exp_ && x.num_ == y.num_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& x, const Dyadic& y);

  int sign() const { return sgn(num_); }
  bool is_integer() const { return exp_ == 0; }
  BigInt floor() const;
  BigInt ceil() const;
  /// floor(log2(x)) for x > 0.
  long floor_log2() const;

  Rational to_rational() const;
  /// Exact conversion; nullopt when the denominator is not a power of two.
  static std::optional<Dyadic> from_rational(const Rational& value);

  /// "p" or "p/q" with q = 2^exp.
  std::string str() const;
  /// Accepts "m", "p/q" (q a power of two) and "m/2^e".
  static Dyadic parse(std::string_view text);

 private:
  void normalize();

  BigInt num_{0};
  std::uint32_t exp_ = 0;
};

/// log2(num/den) when the ratio is a positive power of two.
std::optional<long> log2_ratio(const Dyadic& num, const Dyadic& den);

}  // namespace skewcert
