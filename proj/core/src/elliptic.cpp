#include "realcurves/elliptic.hpp"

#include <sstream>

namespace realcurves {

WeierstrassCurve::WeierstrassCurve(BigRational c2, BigRational c1, BigRational c0)
    : c2_(std::move(c2)), c1_(std::move(c1)), c0_(std::move(c0)) {
  if (discriminant().is_zero()) throw std::invalid_argument("Weierstrass cubic " + cubic().str('v') + " has a repeated root");
}

WeierstrassCurve WeierstrassCurve::from_cubic(const UniPoly& cubic) {
  if (cubic.degree() != 3 || cubic.leading() != BigRational(1)) {
    throw std::invalid_argument("Weierstrass model needs a monic cubic, got " + cubic.str('v'));
  }
  return {cubic.coeff(2), cubic.coeff(1), cubic.coeff(0)};
}

BigRational WeierstrassCurve::discriminant() const {
  // Discriminant of v^3 + b v^2 + c v + d.
  const BigRational &b = c2_, &c = c1_, &d = c0_;
  return BigRational(18) * b * c * d - BigRational(4) * b.pow(3) * d + b * b * c * c - BigRational(4) * c.pow(3) -
         BigRational(27) * d * d;
}

BigRational WeierstrassCurve::rhs(const BigRational& v) const { return ((v + c2_) * v + c1_) * v + c0_; }

std::string WeierstrassCurve::str() const { return "u^2 = " + cubic().str('v'); }

const BigRational& ECPoint::v() const {
  if (!affine_) throw std::logic_error("point at infinity has no coordinates");
  return affine_->v;
}

const BigRational& ECPoint::u() const {
  if (!affine_) throw std::logic_error("point at infinity has no coordinates");
  return affine_->u;
}

ECPoint ECPoint::negated() const {
  if (!affine_) return {};
  return {affine_->v, -affine_->u};
}

std::string ECPoint::str() const {
  if (!affine_) return "Infinity";
  return "(" + affine_->v.str() + ", " + affine_->u.str() + ")";
}

OffCurveError::OffCurveError(const ECPoint& p, BigRational residual)
    : std::invalid_argument("point " + p.str() + " is not on the curve (residual " + residual.str() + ")"),
      residual_(std::move(residual)) {}

BigRational curve_residual(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.is_infinity()) return BigRational(0);
  return e.rhs(p.v()) - p.u() * p.u();
}

bool on_curve(const WeierstrassCurve& e, const ECPoint& p) { return curve_residual(e, p).is_zero(); }

void require_on_curve(const WeierstrassCurve& e, const ECPoint& p) {
  BigRational res = curve_residual(e, p);
  if (!res.is_zero()) throw OffCurveError(p, std::move(res));
}

namespace {

// Third intersection of the line of slope lambda through p, reflected.
ECPoint finish(const WeierstrassCurve& e, const BigRational& lambda, const ECPoint& p, const BigRational& other_v) {
  BigRational v3 = lambda * lambda - e.c2() - p.v() - other_v;
  BigRational u3 = lambda * (p.v() - v3) - p.u();
  return {std::move(v3), std::move(u3)};
}

ECPoint add_unchecked(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q);

ECPoint double_unchecked(const WeierstrassCurve& e, const ECPoint& p) {
  if (p.is_infinity() || p.u().is_zero()) return {};
  const BigRational& v = p.v();
  BigRational slope = (BigRational(3) * v * v + BigRational(2) * e.c2() * v + e.c1()) / (BigRational(2) * p.u());
  return finish(e, slope, p, v);
}

ECPoint add_unchecked(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.v() == q.v()) {
    if (p.u() == q.u()) return double_unchecked(e, p);
    return {};
  }
  BigRational slope = (q.u() - p.u()) / (q.v() - p.v());
  return finish(e, slope, p, q.v());
}

}  // namespace

ECPoint ec_add(const WeierstrassCurve& e, const ECPoint& p, const ECPoint& q) {
  require_on_curve(e, p);
  require_on_curve(e, q);
  return add_unchecked(e, p, q);
}

ECPoint ec_double(const WeierstrassCurve& e, const ECPoint& p) {
  require_on_curve(e, p);
  return double_unchecked(e, p);
}

ECPoint multiple(const WeierstrassCurve& e, long n, const ECPoint& p) {
  require_on_curve(e, p);
  ECPoint base = n < 0 ? p.negated() : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  ECPoint acc;
  while (k > 0) {
    if (k & 1UL) acc = add_unchecked(e, acc, base);
    k >>= 1;
    if (k > 0) base = double_unchecked(e, base);
  }
  return acc;
}

TorsionVerdict torsion_order_bounded(const WeierstrassCurve& e, const ECPoint& p, int bound) {
  if (bound < 1) throw std::invalid_argument("torsion bound must be >= 1");
  require_on_curve(e, p);
  TorsionVerdict verdict;
  verdict.bound = bound;
  ECPoint acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc.is_infinity()) {
      verdict.order = n;
      return verdict;
    }
    acc = add_unchecked(e, acc, p);
  }
  return verdict;
}

}  // namespace realcurves
