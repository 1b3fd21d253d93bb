#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "realcurves/curve.hpp"
#include "realcurves/elliptic.hpp"
#include "realcurves/poly.hpp"

namespace realcurves {

// ---- results and certificates -----------------------------------------------

enum class CertificateKind {
  RuleOnePointAtInfinity,
  RuleConicTable,
  TorsionCoincidence,
  TorsionExhausted,
  NonRationalFactorization,
  GenusTooHigh,
};

std::string_view to_string(CertificateKind kind);

/// Named points on a quartic's Weierstrass model that a multiple of p may hit.
enum class TorsionTarget { P1, P2, P3, MinusP };

/// The relation "multiplier * p = target".
struct TorsionRelation {
  int multiplier = 1;
  TorsionTarget target = TorsionTarget::P1;

  std::string str() const;  // "p = p1", "3p = p2", "2p = -p"
  friend bool operator==(const TorsionRelation&, const TorsionRelation&) = default;
};

struct EtaCertificate {
  CertificateKind kind = CertificateKind::GenusTooHigh;
  /// TorsionCoincidence: the first relation found to hold.
  std::optional<TorsionRelation> relation;
  /// TorsionCoincidence: the exact order of p.
  std::optional<int> order;
  /// TorsionCoincidence / TorsionExhausted: every relation evaluated.
  std::vector<TorsionRelation> cases_checked;
};

/// eta(X), the rank of the group of principal divisors supported at
/// infinity. value is 0, 1 or empty (undetermined).
struct EtaResult {
  std::optional<int> value;
  EtaCertificate certificate;

  bool known() const { return value.has_value(); }
  static EtaResult known_by(int value, CertificateKind kind);
  static EtaResult undetermined(CertificateKind kind);
};

// ---- closed rules -----------------------------------------------------------

/// eta = 0 whenever exactly one point lies at infinity; eta = 1 for a genus 0
/// curve with two real points at infinity (the hyperbola). Otherwise nothing.
std::optional<EtaResult> eta_closed_rules(const CurveInvariants& inv);

// ---- monic rational quartics ------------------------------------------------

/// Normal form of y^2 = P(x), P monic quartic, up to a translation of x:
///   k = 0   ((x+b)^2 + a^2)((x-b)^2 + c^2)
///   k = 2   ((x+b)^2 + a^2)((x-b)^2 - c^2)
///   k = 4   ((x+b)^2 - a^2)((x-b)^2 - c^2)
/// with a, c > 0 rational.
struct QuarticParams {
  int k = 0;
  BigRational a, b, c;
  friend bool operator==(const QuarticParams&, const QuarticParams&) = default;
};

struct NonRational {};

/// Throws std::invalid_argument unless k is 0/2/4, a, c > 0 and the quartic
/// is square-free.
void validate(const QuarticParams& params);

/// Expands the normal form back into a monic quartic.
UniPoly quartic_from_params(const QuarticParams& params);

/// Every rational normal form of Q, in preference order (largest |b| first;
/// for k = 4 this pairs adjacent real roots). Throws std::invalid_argument
/// unless Q is a monic square-free quartic.
std::vector<QuarticParams> quartic_normal_forms(const UniPoly& q);

/// The preferred normal form, or NonRational when Q has no factorization into
/// rational quadratics of the required shape.
std::variant<QuarticParams, NonRational> quartic_normal_form(const UniPoly& q);

/// Weierstrass model of the Jacobian, with p = P1 - P2 (difference of the two
/// points at infinity) and the rational 2-torsion points.
struct QuarticModel {
  QuarticParams params;
  WeierstrassCurve curve;
  ECPoint p;
  ECPoint p1, p2, p3;  // p2, p3 are infinity for k = 2
  /// k = 4: which 2-torsion point shares the identity component with p
  /// (P3 when 4b^2 > (c-a)^2, P1 when 4b^2 < (c-a)^2).
  std::optional<TorsionTarget> neutral_partner;

  ECPoint target_point(TorsionTarget target) const;
};

/// Throws std::invalid_argument on degenerate parameters (including
/// 4b^2 = (c-a)^2 for k = 4).
QuarticModel build_quartic_model(const QuarticParams& params);

/// The finite list of relations deciding eta by Mazur's bound: 6 for k = 0,
/// 10 for k = 2, 4 for k = 4.
std::vector<TorsionRelation> torsion_case_list(const QuarticModel& model);

bool relation_holds(const QuarticModel& model, const TorsionRelation& relation);

/// Counters for the torsion search (instrumentation for tests).
struct TorsionSearchStats {
  int cases_evaluated = 0;
  long max_multiplier = 0;
};

/// eta for a model built from known parameters.
EtaResult quartic_eta(const QuarticModel& model, TorsionSearchStats* stats = nullptr);

/// eta of y^2 = Q(x), Q a monic square-free rational quartic. Undetermined
/// (NonRationalFactorization) when no rational normal form exists. Throws
/// std::invalid_argument on non-monic, wrong-degree or non-square-free input.
EtaResult quartic_eta(const UniPoly& q, TorsionSearchStats* stats = nullptr);

// ---- dispatch ---------------------------------------------------------------

struct EtaReport {
  EtaResult eta;                          // eta(X)
  std::optional<EtaResult> eta_complex;   // eta(X_C) when derivable
};

EtaReport eta_full(const CurveSpec& spec, const CurveInvariants& inv);

// ---- level of the coordinate ring ---------------------------------------------

enum class RingLevel { One, Three, TwoOrThree, Infinite };

std::string_view to_string(RingLevel level);

struct LevelReport {
  RingLevel level = RingLevel::Infinite;
  std::string reason;
};

/// Level of O(X). With no real points it is 2 or 3; eta(X_C) = 0 rules out 2.
LevelReport level_bounds(const CurveInvariants& inv, const std::optional<EtaResult>& eta_complex);

}  // namespace realcurves
