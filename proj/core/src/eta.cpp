#include "realcurves/eta.hpp"

#include <algorithm>
#include <stdexcept>

#include "realcurves/errors.hpp"

namespace realcurves {

std::string_view to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::RuleOnePointAtInfinity: return "RuleOnePointAtInfinity";
    case CertificateKind::RuleConicTable: return "RuleConicTable";
    case CertificateKind::TorsionCoincidence: return "TorsionCoincidence";
    case CertificateKind::TorsionExhausted: return "TorsionExhausted";
    case CertificateKind::NonRationalFactorization: return "NonRationalFactorization";
    case CertificateKind::GenusTooHigh: return "GenusTooHigh";
  }
  return "?";
}

std::string TorsionRelation::str() const {
  std::string lhs = multiplier == 1 ? "p" : std::to_string(multiplier) + "p";
  switch (target) {
    case TorsionTarget::P1: return lhs + " = p1";
    case TorsionTarget::P2: return lhs + " = p2";
    case TorsionTarget::P3: return lhs + " = p3";
    case TorsionTarget::MinusP: return lhs + " = -p";
  }
  return lhs;
}

EtaResult EtaResult::known_by(int value, CertificateKind kind) {
  EtaResult r;
  r.value = value;
  r.certificate.kind = kind;
  return r;
}

EtaResult EtaResult::undetermined(CertificateKind kind) {
  EtaResult r;
  r.certificate.kind = kind;
  return r;
}

std::optional<EtaResult> eta_closed_rules(const CurveInvariants& inv) {
  if (inv.complete) return std::nullopt;
  if (inv.r + inv.c == 1) return EtaResult::known_by(0, CertificateKind::RuleOnePointAtInfinity);
  // Genus 0 with two real points at infinity: the ratio of the two linear
  // forms vanishing there is a unit.
  if (inv.g == 0 && inv.r == 2 && inv.c == 0) return EtaResult::known_by(1, CertificateKind::RuleConicTable);
  return std::nullopt;
}

// ---- normal forms -----------------------------------------------------------

namespace {

const BigRational kZero(0);
const BigRational kOne(1);
const BigRational kTwo(2);
const BigRational kFour(4);

UniPoly shifted_square(const BigRational& shift, const BigRational& constant) {
  // (x + shift)^2 + constant
  return UniPoly({shift * shift + constant, kTwo * shift, kOne});
}

}  // namespace

void validate(const QuarticParams& params) {
  if (params.k != 0 && params.k != 2 && params.k != 4) throw std::invalid_argument("quartic parameter k must be 0, 2 or 4");
  if (params.a.sign() <= 0 || params.c.sign() <= 0) throw std::invalid_argument("quartic parameters need a > 0 and c > 0");
  if (!is_square_free(quartic_from_params(params))) {
    throw std::invalid_argument("quartic parameters give a repeated root (zero discriminant)");
  }
}

UniPoly quartic_from_params(const QuarticParams& p) {
  const BigRational a2 = p.a * p.a;
  const BigRational c2 = p.c * p.c;
  switch (p.k) {
    case 0: return shifted_square(p.b, a2) * shifted_square(-p.b, c2);
    case 2: return shifted_square(p.b, a2) * shifted_square(-p.b, -c2);
    case 4: return shifted_square(p.b, -a2) * shifted_square(-p.b, -c2);
    default: throw std::invalid_argument("quartic parameter k must be 0, 2 or 4");
  }
}

namespace {

void require_monic_square_free_quartic(const UniPoly& q) {
  if (q.degree() != 4) throw std::invalid_argument("expected a quartic, got degree " + std::to_string(q.degree()));
  if (q.leading() != kOne) throw std::invalid_argument("expected a monic quartic, got " + q.str());
  if (!is_square_free(q)) throw std::invalid_argument("quartic " + q.str() + " is not square-free");
}

// Completes (x + b)^2 + alpha, (x - b)^2 + gamma into the k-shaped normal
// form when the signs match and the square roots are rational.
std::optional<QuarticParams> read_params(int k, const BigRational& b, const BigRational& alpha,
                                         const BigRational& gamma) {
  auto root = [](const BigRational& x) { return x.sqrt_exact(); };
  if (alpha.is_zero() || gamma.is_zero()) return std::nullopt;
  std::optional<BigRational> a, c;
  BigRational bb = b;
  switch (k) {
    case 0:
      if (alpha.sign() < 0 || gamma.sign() < 0) return std::nullopt;
      a = root(alpha);
      c = root(gamma);
      break;
    case 2:
      if (alpha.sign() > 0 && gamma.sign() < 0) {
        a = root(alpha);
        c = root(-gamma);
      } else if (alpha.sign() < 0 && gamma.sign() > 0) {
        // Swap the factors: b changes sign.
        a = root(gamma);
        c = root(-alpha);
        bb = -b;
      } else {
        return std::nullopt;
      }
      break;
    case 4:
      if (alpha.sign() > 0 || gamma.sign() > 0) return std::nullopt;
      a = root(-alpha);
      c = root(-gamma);
      break;
    default:
      return std::nullopt;
  }
  if (!a || !c) return std::nullopt;
  return QuarticParams{k, *a, bb, *c};
}

}  // namespace

std::vector<QuarticParams> quartic_normal_forms(const UniPoly& q) {
  require_monic_square_free_quartic(q);
  const int k = count_real_roots(q);

  // Depress: D(x) = Q(x - a3/4) = x^4 + p x^2 + s x + r.
  const BigRational shift = -q.coeff(3) / kFour;
  const UniPoly depressed = q.translated(shift);
  const BigRational p = depressed.coeff(2);
  const BigRational s = depressed.coeff(1);
  const BigRational r = depressed.coeff(0);

  // D = (x^2 + u x + v)(x^2 - u x + w) forces U = u^2 to be a root of the
  // resolvent cubic U^3 + 2p U^2 + (p^2 - 4r) U - s^2.
  const UniPoly resolvent({-s * s, p * p - kFour * r, kTwo * p, kOne});
  std::vector<BigRational> roots = rational_roots(resolvent);
  std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) { return x > y; });

  std::vector<QuarticParams> out;
  for (const auto& big_u : roots) {
    if (big_u.sign() < 0) continue;
    BigRational u, v, w;
    if (big_u.is_zero()) {
      // s = 0 here; D = (x^2 + v)(x^2 + w) with v + w = p, v w = r.
      auto disc = (p * p - kFour * r).sqrt_exact();
      if (!disc) continue;
      u = kZero;
      v = (p - *disc) / kTwo;
      w = (p + *disc) / kTwo;
    } else {
      auto root_u = big_u.sqrt_exact();
      if (!root_u) continue;
      u = *root_u;
      v = (p + big_u - s / u) / kTwo;
      w = (p + big_u + s / u) / kTwo;
    }
    const UniPoly f1({v, u, kOne});
    const UniPoly f2({w, -u, kOne});
    if (f1 * f2 != depressed) throw InternalError("quartic factorization does not multiply back");

    const BigRational b = u / kTwo;
    const BigRational quarter_u2 = u * u / kFour;
    if (auto params = read_params(k, b, v - quarter_u2, w - quarter_u2)) {
      if (quartic_from_params(*params) != depressed) throw InternalError("normal form does not reproduce the quartic");
      out.push_back(*params);
    }
  }
  return out;
}

std::variant<QuarticParams, NonRational> quartic_normal_form(const UniPoly& q) {
  auto forms = quartic_normal_forms(q);
  if (forms.empty()) return NonRational{};
  return forms.front();
}

// ---- Weierstrass models -----------------------------------------------------

ECPoint QuarticModel::target_point(TorsionTarget target) const {
  switch (target) {
    case TorsionTarget::P1: return p1;
    case TorsionTarget::P2: return p2;
    case TorsionTarget::P3: return p3;
    case TorsionTarget::MinusP: return p.negated();
  }
  return {};
}

QuarticModel build_quartic_model(const QuarticParams& params) {
  validate(params);
  const BigRational& a = params.a;
  const BigRational& b = params.b;
  const BigRational& c = params.c;
  const BigRational a2 = a * a, c2 = c * c, b2 = b * b;
  const BigRational diff2 = (c - a) * (c - a);
  const BigRational sum2 = (c + a) * (c + a);
  const UniPoly first = UniPoly::linear_root(-kFour * b2);  // v + 4b^2

  std::optional<TorsionTarget> partner;
  UniPoly cubic;
  ECPoint p, p1, p2, p3;
  switch (params.k) {
    case 0:
      cubic = first * UniPoly::linear_root(diff2) * UniPoly::linear_root(sum2);
      p = ECPoint(kZero, kTwo * b * (c2 - a2));
      p1 = ECPoint(-kFour * b2, kZero);
      p2 = ECPoint(diff2, kZero);
      p3 = ECPoint(sum2, kZero);
      break;
    case 2:
      cubic = first * UniPoly({(c2 + a2) * (c2 + a2), kTwo * (c2 - a2), kOne});
      p = ECPoint(kZero, kTwo * b * (c2 + a2));
      p1 = ECPoint(-kFour * b2, kZero);
      break;
    case 4: {
      const BigRational lhs = kFour * b2;
      if (lhs == diff2) throw std::invalid_argument("k = 4 with 4b^2 = (c-a)^2 is degenerate");
      cubic = first * UniPoly::linear_root(-diff2) * UniPoly::linear_root(-sum2);
      p = ECPoint(kZero, kTwo * b * (c2 - a2));
      p1 = ECPoint(-kFour * b2, kZero);
      p2 = ECPoint(-sum2, kZero);
      p3 = ECPoint(-diff2, kZero);
      partner = lhs > diff2 ? TorsionTarget::P3 : TorsionTarget::P1;
      break;
    }
    default:
      throw std::invalid_argument("quartic parameter k must be 0, 2 or 4");
  }

  std::optional<WeierstrassCurve> curve;
  try {
    curve.emplace(WeierstrassCurve::from_cubic(cubic));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("quartic parameters give a singular Weierstrass model");
  }
  QuarticModel model{params, *curve, p, p1, p2, p3, partner};
  for (const ECPoint* pt : {&model.p, &model.p1, &model.p2, &model.p3}) {
    if (!on_curve(model.curve, *pt)) throw InternalError("model point " + pt->str() + " is off " + model.curve.str());
  }
  return model;
}

std::vector<TorsionRelation> torsion_case_list(const QuarticModel& model) {
  std::vector<TorsionRelation> cases;
  switch (model.params.k) {
    case 0:
      for (int n = 1; n <= 2; ++n) {
        cases.push_back({2 * n - 1, TorsionTarget::P1});
        cases.push_back({2 * n - 1, TorsionTarget::P2});
        cases.push_back({2 * n, TorsionTarget::P3});
      }
      break;
    case 2:
      for (int n = 1; n <= 6; ++n) cases.push_back({n, TorsionTarget::P1});
      for (int n = 1; n <= 4; ++n) cases.push_back({2 * n, TorsionTarget::MinusP});
      break;
    case 4:
      for (int n = 1; n <= 4; ++n) cases.push_back({n, *model.neutral_partner});
      break;
    default:
      throw std::invalid_argument("quartic parameter k must be 0, 2 or 4");
  }
  return cases;
}

bool relation_holds(const QuarticModel& model, const TorsionRelation& relation) {
  return multiple(model.curve, relation.multiplier, model.p) == model.target_point(relation.target);
}

EtaResult quartic_eta(const QuarticModel& model, TorsionSearchStats* stats) {
  const auto cases = torsion_case_list(model);
  std::optional<TorsionRelation> hit;
  for (const auto& rel : cases) {
    if (stats) {
      ++stats->cases_evaluated;
      stats->max_multiplier = std::max<long>(stats->max_multiplier, rel.multiplier);
    }
    if (relation_holds(model, rel) && !hit) hit = rel;
  }
  EtaResult result;
  result.certificate.cases_checked = cases;
  if (!hit) {
    result.value = 0;
    result.certificate.kind = CertificateKind::TorsionExhausted;
    return result;
  }
  const TorsionVerdict verdict = torsion_order_bounded(model.curve, model.p, kMazurBound);
  if (!verdict.is_torsion()) throw InternalError("relation " + hit->str() + " holds but p is not torsion");
  result.value = 1;
  result.certificate.kind = CertificateKind::TorsionCoincidence;
  result.certificate.relation = hit;
  result.certificate.order = verdict.order;
  return result;
}

EtaResult quartic_eta(const UniPoly& q, TorsionSearchStats* stats) {
  auto form = quartic_normal_form(q);
  if (std::holds_alternative<NonRational>(form)) return EtaResult::undetermined(CertificateKind::NonRationalFactorization);
  return quartic_eta(build_quartic_model(std::get<QuarticParams>(form)), stats);
}

// ---- dispatch ---------------------------------------------------------------

namespace {

EtaResult quartic_eta_if_monic(const UniPoly& q) {
  if (q.leading() != kOne) return EtaResult::undetermined(CertificateKind::NonRationalFactorization);
  return quartic_eta(q);
}

}  // namespace

EtaReport eta_full(const CurveSpec& spec, const CurveInvariants& inv) {
  EtaReport report;
  auto closed = eta_closed_rules(inv);
  const bool hyperelliptic = spec.kind() == CurveSpec::Kind::Hyperelliptic;
  const int d = hyperelliptic ? spec.q().degree() : 0;
  const int sigma = hyperelliptic ? spec.q().leading().sign() : 0;

  if (closed) {
    report.eta = *closed;
    if (inv.c == 0) {
      report.eta_complex = report.eta;
    } else if (hyperelliptic && d == 4 && sigma < 0) {
      // The twin y^2 = -Q has the same complexification.
      report.eta_complex = quartic_eta_if_monic(-spec.q());
    } else if (inv.g == 0 && inv.geometrically_connected && inv.r + 2 * inv.c == 2) {
      // X_C is P^1 minus two points.
      report.eta_complex = EtaResult::known_by(1, CertificateKind::RuleConicTable);
    }
    return report;
  }
  if (hyperelliptic && d % 2 == 0 && sigma > 0) {
    report.eta = d == 4 ? quartic_eta_if_monic(spec.q()) : EtaResult::undetermined(CertificateKind::GenusTooHigh);
    report.eta_complex = report.eta;  // c = 0
    return report;
  }
  throw InternalError("eta_full: no rule covers this curve");
}

std::string_view to_string(RingLevel level) {
  switch (level) {
    case RingLevel::One: return "1";
    case RingLevel::Three: return "3";
    case RingLevel::TwoOrThree: return "2 or 3";
    case RingLevel::Infinite: return "infinite";
  }
  return "?";
}

LevelReport level_bounds(const CurveInvariants& inv, const std::optional<EtaResult>& eta_complex) {
  if (!inv.geometrically_connected) return {RingLevel::One, "X_C is disconnected, so -1 is a square in O(X)"};
  if (inv.has_real_points()) return {RingLevel::Infinite, "X(R) is nonempty, so O(X) is formally real"};
  if (eta_complex && eta_complex->value == 0) {
    return {RingLevel::Three, "eta(X_C) = 0 excludes level 2"};
  }
  if (eta_complex && eta_complex->value == 1) {
    return {RingLevel::TwoOrThree, "eta(X_C) = 1 does not decide between 2 and 3"};
  }
  return {RingLevel::TwoOrThree, "eta(X_C) unknown"};
}

}  // namespace realcurves
