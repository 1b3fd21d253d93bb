#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "realcurves/rational.hpp"

namespace realcurves {

/// Univariate polynomial over Q, coefficients in ascending degree order.
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial has an empty vector and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<BigRational> ascending);
  UniPoly(std::initializer_list<BigRational> ascending);

  static UniPoly constant(const BigRational& value);
  /// The monomial coeff * x^power.
  static UniPoly monomial(const BigRational& coeff, int power);
  /// x - root.
  static UniPoly linear_root(const BigRational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const BigRational> coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  BigRational coeff(int i) const;
  /// Throws std::domain_error for the zero polynomial.
  const BigRational& leading() const;

  BigRational eval(const BigRational& x) const;
  /// Sign of p(x) in {-1, 0, 1}.
  int sign_at(const BigRational& x) const { return eval(x).sign(); }

  UniPoly derivative() const;
  /// Divides by the leading coefficient; the zero polynomial maps to itself.
  UniPoly monic() const;
  /// p(x + shift).
  UniPoly translated(const BigRational& shift) const;
  /// p(-x).
  UniPoly reflected() const;

  /// Euclidean division: returns (quotient, remainder). Throws std::domain_error
  /// when dividing by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Human readable form in the given variable, highest degree first,
  /// e.g. "x^4 - 10*x^2 + 9".
  std::string str(char var = 'x') const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& s);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const BigRational& s) { return a *= s; }
  friend UniPoly operator*(const BigRational& s, UniPoly a) { return a *= s; }
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

/// Monic greatest common divisor; gcd(p, 0) = monic(p), gcd(0, 0) = 0.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

/// True iff gcd(p, p') is a nonzero constant. Throws std::invalid_argument
/// on the zero polynomial.
bool is_square_free(const UniPoly& p);

/// p / gcd(p, p'), made monic.
UniPoly square_free_part(const UniPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... Each entry is rescaled by a positive
/// constant, which leaves every sign untouched.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Sign variations of the chain evaluated at x, zeros skipped.
int sign_variations(std::span<const UniPoly> chain, const BigRational& x);

/// Cauchy bound 1 + max |a_i / a_d|: every real root lies strictly inside.
BigRational cauchy_bound(const UniPoly& p);

/// Number of distinct real roots of a square-free polynomial. Throws
/// std::invalid_argument on zero or non-square-free input.
int count_real_roots(const UniPoly& p);

/// Distinct real roots in the half-open interval (lo, hi] of a square-free
/// polynomial, from a precomputed Sturm chain.
int count_roots_in(std::span<const UniPoly> chain, const BigRational& lo, const BigRational& hi);

/// All distinct rational roots, ascending. Throws std::invalid_argument on
/// the zero polynomial.
std::vector<BigRational> rational_roots(const UniPoly& p);

}  // namespace realcurves
