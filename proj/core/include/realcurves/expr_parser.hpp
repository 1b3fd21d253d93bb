#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "realcurves/rational.hpp"

namespace realcurves {

/// Sparse polynomial in at most two variables over Q, keyed by the exponent
/// pair (first variable, second variable).
struct BiPoly {
  using Exponents = std::array<int, 2>;
  std::map<Exponents, BigRational> terms;

  static BiPoly constant(const BigRational& c);
  static BiPoly variable(int index);

  bool is_zero() const { return terms.empty(); }
  BigRational coeff(int i, int j) const;
  int total_degree() const;
  /// Highest exponent of the given variable; -1 for the zero polynomial.
  int degree_in(int index) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;
};

/// Parses a polynomial expression such as "3/2*x^2 - (x + 1)*(y - 2)".
/// vars lists the accepted variable letters (one or two), e.g. "xy" or "v".
/// Supports + - * ^, parentheses, integer and p/q literals, and implicit
/// multiplication ("2x", "(x+1)(x-1)"). Throws ParseError with the offset of
/// the offending character; base_offset is added to reported positions.
BiPoly parse_polynomial(std::string_view text, std::string_view vars, std::size_t base_offset = 0);

}  // namespace realcurves
