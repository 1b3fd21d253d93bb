#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace realcurves {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over mpq_class; every operation
/// returns a canonical result.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& value) : q_(value) {}
  /// Throws std::domain_error on a zero denominator.
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const mpq_class& value) : q_(value) { q_.canonicalize(); }

  /// Parses "n", "-n" or "n/d" (decimal integers). Throws std::invalid_argument.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const;
  BigRational reciprocal() const;
  BigRational pow(unsigned exponent) const;
  /// Exact square root when this is the square of a rational.
  std::optional<BigRational> sqrt_exact() const;
  /// Largest integer <= this.
  BigInt floor() const;
  BigInt ceil() const;

  std::string str() const { return q_.get_str(); }
  double to_double() const { return q_.get_d(); }

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  /// Throws std::domain_error on division by zero.
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a);

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& value);

BigRational abs(const BigRational& value);

}  // namespace realcurves
