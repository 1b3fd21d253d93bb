#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "realcurves/poly.hpp"
#include "realcurves/rational.hpp"

namespace realcurves {

/// u^2 = v^3 + c2*v^2 + c1*v + c0 over Q, with nonzero cubic discriminant.
class WeierstrassCurve {
 public:
  /// Throws std::invalid_argument when the cubic has a repeated root.
  WeierstrassCurve(BigRational c2, BigRational c1, BigRational c0);
  /// From a monic cubic in v.
  static WeierstrassCurve from_cubic(const UniPoly& cubic);

  const BigRational& c2() const { return c2_; }
  const BigRational& c1() const { return c1_; }
  const BigRational& c0() const { return c0_; }
  UniPoly cubic() const { return UniPoly({c0_, c1_, c2_, BigRational(1)}); }
  BigRational discriminant() const;
  BigRational rhs(const BigRational& v) const;

  std::string str() const;
  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;

 private:
  BigRational c2_, c1_, c0_;
};

/// A point of E(Q): the point at infinity or an affine (v, u).
class ECPoint {
 public:
  ECPoint() = default;  // infinity
  ECPoint(BigRational v, BigRational u) : affine_(Affine{std::move(v), std::move(u)}) {}
  static ECPoint infinity() { return {}; }

  bool is_infinity() const { return !affine_.has_value(); }
  /// Throws std::logic_error at infinity.
  const BigRational& v() const;
  const BigRational& u() const;
  ECPoint negated() const;

  std::string str() const;
  friend bool operator==(const ECPoint&, const ECPoint&) = default;

 private:
  struct Affine {
    BigRational v, u;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

/// Thrown when a point does not satisfy the curve equation; carries the
/// exact residual rhs(v) - u^2.
class OffCurveError : public std::invalid_argument {
 public:
  OffCurveError(const ECPoint& p, BigRational residual);
  const BigRational& residual() const { return residual_; }

 private:
  BigRational residual_;
};

bool on_curve(const WeierstrassCurve& e, const ECPoint& p);
/// rhs(v) - u^2, zero for points on the curve (and for infinity).
BigRational curve_residual(const WeierstrassCurve& e, const ECPoint& p);
/// Throws OffCurveError.
void require_on_curve(const WeierstrassCurve& e, const ECPoint& p);

/// Chord-and-tangent sum.
ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);
/// Tangent doubling; infinity exactly when u = 0.
ECPoint ec_double(const WeierstrassCurve& e, const ECPoint& p);
/// n*P by double-and-add; negative n gives -(|n| P).
ECPoint multiple(const WeierstrassCurve& e, long n, const ECPoint& p);

/// Outcome of a bounded torsion search: the order when some n <= bound
/// kills the point, nothing otherwise.
struct TorsionVerdict {
  std::optional<int> order;
  int bound = 0;
  bool is_torsion() const { return order.has_value(); }
};

/// Smallest n in [1, bound] with n*P = infinity. Throws std::invalid_argument
/// for bound < 1.
TorsionVerdict torsion_order_bounded(const WeierstrassCurve& e, const ECPoint& p, int bound);

/// Mazur: no point of E(Q) has finite order above 12.
inline constexpr int kMazurBound = 12;

}  // namespace realcurves
