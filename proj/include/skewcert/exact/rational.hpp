#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "skewcert/exact/bigint.hpp"

namespace skewcert {

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  Rational operator-() const;
  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }

  friend bool operator==(const Rational& x, const Rational& y) { return x.value_ == y.value_; }
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return cmp(x.value_, y.value_) <=> 0;
  }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  Rational abs() const;

  /// "p" or "p/q".
  std::string str() const;
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

}  // namespace skewcert
