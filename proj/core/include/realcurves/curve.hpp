#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "realcurves/poly.hpp"
#include "realcurves/rational.hpp"

namespace realcurves {

/// Level of the function field R(X): the least n such that -1 is a sum of
/// n squares, or Infinite when X(R) is nonempty.
enum class Level { One, Two, Infinite };

std::string_view to_string(Level level);

/// P(x, y) = xx*x^2 + xy*x*y + yy*y^2 + x*x + y*y + one.
struct ConicCoeffs {
  BigRational xx, xy, yy, x, y, one;
  friend bool operator==(const ConicCoeffs&, const ConicCoeffs&) = default;
};

/// A parsed affine plane curve: either a conic P(x, y) = 0 or y^2 = Q(x).
/// Construction enforces the hypotheses: a conic has some term of degree
/// >= 1, and Q is nonconstant and square-free.
class CurveSpec {
 public:
  enum class Kind { Conic, Hyperelliptic };

  static CurveSpec conic(const ConicCoeffs& coeffs);
  static CurveSpec hyperelliptic(const UniPoly& q);

  Kind kind() const { return std::holds_alternative<ConicCoeffs>(data_) ? Kind::Conic : Kind::Hyperelliptic; }
  /// Throws std::logic_error on the wrong kind.
  const ConicCoeffs& conic_coeffs() const;
  const UniPoly& q() const;

  /// Canonical text, e.g. "x^2 + y^2 - 1 = 0" or "y^2 = x^4 - 1".
  std::string str() const;

 private:
  explicit CurveSpec(std::variant<ConicCoeffs, UniPoly> data) : data_(std::move(data)) {}
  std::variant<ConicCoeffs, UniPoly> data_;
};

/// Topological and geometric invariants of a smooth real curve X.
///  g: genus of the smooth completion (of one component of X_C when X_C is
///     disconnected)
///  r, c: real and complex points of the completion lying at infinity
///  s, t: connected components of X(R), and how many of them are compact
/// d, d_prime, k, k_prime are only meaningful for y^2 = Q(x).
struct CurveInvariants {
  std::optional<int> d;
  std::optional<int> d_prime;
  std::optional<int> k;
  std::optional<int> k_prime;
  int g = 0;
  int r = 0;
  int c = 0;
  int s = 0;
  int t = 0;
  bool complete = false;
  bool geometrically_connected = true;
  Level level_of_function_field = Level::Infinite;

  bool has_real_points() const { return s > 0; }
  friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

/// Throws InconsistentInvariants when the tuple cannot describe a smooth
/// connected real curve.
void validate(const CurveInvariants& inv);

enum class ConicType { Ellipse, Parabola, Hyperbola, ImaginaryEllipse, Line, GeomDisconnected };

std::string_view to_string(ConicType type);

struct ConicClass {
  ConicType type;
  CurveInvariants invariants;
};

/// Signature of a real symmetric matrix: counts of positive, negative and
/// zero eigenvalues, read off the characteristic polynomial by Descartes'
/// rule (exact because the polynomial is real-rooted).
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int rank() const { return positive + negative; }
  bool is_definite() const { return zero == 0 && (positive == 0 || negative == 0); }
  bool is_semidefinite() const { return positive == 0 || negative == 0; }
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Characteristic polynomial det(lambda*I - m) of a square matrix
/// (Faddeev-LeVerrier).
UniPoly characteristic_polynomial(const std::vector<std::vector<BigRational>>& m);
Signature signature(const std::vector<std::vector<BigRational>>& symmetric);

/// Parses "<poly in x,y> = <poly in x,y>" (conic, total degree <= 2) or
/// "y^2 = <poly in x>" (hyperelliptic). Throws ParseError on bad syntax or
/// degree, HypothesisError when the parsed curve violates the hypotheses.
CurveSpec parse_curve(std::string_view text);

/// Hyperelliptic curve from ascending coefficients "a0,a1,...,ad".
CurveSpec parse_coefficient_list(std::string_view text);

/// Throws HypothesisError for singular or really reducible conics.
ConicClass classify_conic(const CurveSpec& spec);

CurveInvariants hyperelliptic_invariants(const CurveSpec& spec);

/// Dispatches on the curve kind.
CurveInvariants curve_invariants(const CurveSpec& spec);

}  // namespace realcurves
