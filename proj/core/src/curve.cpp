#include "realcurves/curve.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "realcurves/errors.hpp"
#include "realcurves/expr_parser.hpp"

namespace realcurves {

std::string_view to_string(Level level) {
  switch (level) {
    case Level::One: return "1";
    case Level::Two: return "2";
    case Level::Infinite: return "infinite";
  }
  return "?";
}

std::string_view to_string(ConicType type) {
  switch (type) {
    case ConicType::Ellipse: return "ellipse";
    case ConicType::Parabola: return "parabola";
    case ConicType::Hyperbola: return "hyperbola";
    case ConicType::ImaginaryEllipse: return "imaginary_ellipse";
    case ConicType::Line: return "line";
    case ConicType::GeomDisconnected: return "geometrically_disconnected";
  }
  return "?";
}

// ---- CurveSpec --------------------------------------------------------------

CurveSpec CurveSpec::conic(const ConicCoeffs& k) {
  if (k.xx.is_zero() && k.xy.is_zero() && k.yy.is_zero() && k.x.is_zero() && k.y.is_zero()) {
    throw HypothesisError("conic has no term of degree >= 1; it does not define a curve");
  }
  return CurveSpec(k);
}

CurveSpec CurveSpec::hyperelliptic(const UniPoly& q) {
  if (q.is_constant()) throw HypothesisError("Q(x) must be nonconstant");
  if (!is_square_free(q)) throw HypothesisError("Q(x) = " + q.str() + " is not square-free; the curve is singular");
  return CurveSpec(q);
}

const ConicCoeffs& CurveSpec::conic_coeffs() const {
  if (const auto* k = std::get_if<ConicCoeffs>(&data_)) return *k;
  throw std::logic_error("curve is not a conic");
}

const UniPoly& CurveSpec::q() const {
  if (const auto* q = std::get_if<UniPoly>(&data_)) return *q;
  throw std::logic_error("curve is not hyperelliptic");
}

std::string CurveSpec::str() const {
  if (kind() == Kind::Hyperelliptic) return "y^2 = " + q().str();
  const auto& k = conic_coeffs();
  const std::pair<const BigRational*, const char*> terms[] = {
      {&k.xx, "x^2"}, {&k.xy, "x*y"}, {&k.yy, "y^2"}, {&k.x, "x"}, {&k.y, "y"}, {&k.one, ""}};
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, mono] : terms) {
    if (c->is_zero()) continue;
    if (first) {
      if (c->sign() < 0) os << "-";
    } else {
      os << (c->sign() < 0 ? " - " : " + ");
    }
    first = false;
    BigRational mag = c->abs();
    std::string m(mono);
    if (m.empty()) {
      os << mag;
    } else {
      if (mag != BigRational(1)) os << mag << "*";
      os << m;
    }
  }
  os << " = 0";
  return os.str();
}

// ---- invariants -------------------------------------------------------------

void validate(const CurveInvariants& inv) {
  auto fail = [](const std::string& why) { throw InconsistentInvariants("inconsistent invariants: " + why); };
  if (inv.g < 0 || inv.r < 0 || inv.c < 0 || inv.s < 0 || inv.t < 0) fail("negative count");
  if (inv.t > inv.s) fail("more compact components than components");
  if (inv.d && inv.k && *inv.k > *inv.d) fail("more real roots than the degree");
  if (inv.complete && (inv.r != 0 || inv.c != 0)) fail("complete curve with points at infinity");
  if (!inv.complete && inv.r + inv.c == 0) fail("affine curve without points at infinity");

  if (!inv.geometrically_connected) {
    if (inv.s != 0 || inv.r != 0) fail("geometrically disconnected curve with real points");
    if (inv.level_of_function_field != Level::One) fail("geometrically disconnected curve must have level 1");
    return;
  }
  if (inv.level_of_function_field == Level::One) fail("level 1 requires a geometrically disconnected curve");
  if (inv.s > 0) {
    if (inv.level_of_function_field != Level::Infinite) fail("real points force infinite level");
    if (inv.complete && inv.s != inv.t) fail("components of a complete curve are compact");
    if (!inv.complete && inv.s != inv.t + inv.r) fail("s != t + r");
  } else {
    if (inv.level_of_function_field != Level::Two) fail("no real points forces level 2");
    if (inv.t != 0 || inv.r != 0) fail("no real points but t or r nonzero");
  }
}

CurveInvariants hyperelliptic_invariants(const CurveSpec& spec) {
  if (spec.kind() != CurveSpec::Kind::Hyperelliptic) throw std::invalid_argument("expected y^2 = Q(x)");
  const UniPoly& q = spec.q();
  CurveInvariants inv;
  const int d = q.degree();
  const int k = count_real_roots(q);
  const int sigma = q.leading().sign();
  inv.d = d;
  inv.d_prime = d / 2;
  inv.k = k;
  inv.k_prime = k / 2;
  const int dp = d / 2;
  const int kp = k / 2;

  if (d % 2 == 1) {
    inv.r = 1;
    inv.c = 0;
    inv.g = dp;
    inv.s = kp + 1;
    inv.t = kp;
  } else if (sigma < 0) {
    // y^2 + P(x) = 0 with P of positive leading coefficient.
    inv.r = 0;
    inv.c = 1;
    inv.g = dp - 1;
    inv.s = kp;
    inv.t = kp;
  } else {
    inv.r = 2;
    inv.c = 0;
    inv.g = dp - 1;
    if (k > 0) {
      inv.s = kp + 1;
      inv.t = kp - 1;
    } else {
      inv.s = 2;
      inv.t = 0;
    }
  }
  inv.geometrically_connected = true;
  inv.level_of_function_field = inv.s == 0 ? Level::Two : Level::Infinite;
  validate(inv);
  return inv;
}

// ---- signatures -------------------------------------------------------------

UniPoly characteristic_polynomial(const std::vector<std::vector<BigRational>>& a) {
  const size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("characteristic_polynomial: matrix is not square");
  }
  using Matrix = std::vector<std::vector<BigRational>>;
  auto mul = [n](const Matrix& x, const Matrix& y) {
    Matrix out(n, std::vector<BigRational>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        if (x[i][k].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
      }
    return out;
  };
  // coeffs[i] is the coefficient of lambda^i.
  std::vector<BigRational> coeffs(n + 1);
  coeffs[n] = BigRational(1);
  Matrix m(n, std::vector<BigRational>(n));
  for (size_t k = 1; k <= n; ++k) {
    Matrix am = mul(a, m);
    for (size_t i = 0; i < n; ++i) am[i][i] += coeffs[n - k + 1];
    m = std::move(am);
    Matrix prod = mul(a, m);
    BigRational trace(0);
    for (size_t i = 0; i < n; ++i) trace += prod[i][i];
    coeffs[n - k] = -trace / BigRational(static_cast<long>(k));
  }
  return UniPoly(std::move(coeffs));
}

namespace {

int coefficient_sign_changes(const UniPoly& p) {
  int changes = 0;
  int last = 0;
  for (const auto& c : p.coefficients()) {
    int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature signature(const std::vector<std::vector<BigRational>>& symmetric) {
  const int n = static_cast<int>(symmetric.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (symmetric[i][j] != symmetric[j][i]) throw std::invalid_argument("signature: matrix is not symmetric");
  const UniPoly chi = characteristic_polynomial(symmetric);
  Signature sig;
  int zero_mult = 0;
  while (zero_mult < n && chi.coeff(zero_mult).is_zero()) ++zero_mult;
  sig.zero = zero_mult;
  sig.positive = coefficient_sign_changes(chi);
  sig.negative = coefficient_sign_changes(chi.reflected());
  if (sig.positive + sig.negative + sig.zero != n) throw InternalError("signature: eigenvalue counts do not add up");
  return sig;
}

// ---- conics -----------------------------------------------------------------

namespace {

CurveInvariants conic_table(ConicType type) {
  CurveInvariants inv;
  inv.g = 0;
  switch (type) {
    case ConicType::Ellipse:
      inv.r = 0, inv.c = 1, inv.s = 1, inv.t = 1;
      break;
    case ConicType::Parabola:
    case ConicType::Line:
      inv.r = 1, inv.c = 0, inv.s = 1, inv.t = 0;
      break;
    case ConicType::Hyperbola:
      inv.r = 2, inv.c = 0, inv.s = 2, inv.t = 0;
      break;
    case ConicType::ImaginaryEllipse:
      inv.r = 0, inv.c = 1, inv.s = 0, inv.t = 0;
      break;
    case ConicType::GeomDisconnected:
      inv.r = 0, inv.c = 1, inv.s = 0, inv.t = 0;
      inv.geometrically_connected = false;
      break;
  }
  if (!inv.geometrically_connected) {
    inv.level_of_function_field = Level::One;
  } else {
    inv.level_of_function_field = inv.s == 0 ? Level::Two : Level::Infinite;
  }
  validate(inv);
  return inv;
}

}  // namespace

ConicClass classify_conic(const CurveSpec& spec) {
  if (spec.kind() != CurveSpec::Kind::Conic) throw std::invalid_argument("expected a conic");
  const ConicCoeffs& k = spec.conic_coeffs();
  const BigRational half(1, 2);

  auto done = [](ConicType t) { return ConicClass{t, conic_table(t)}; };

  if (k.xx.is_zero() && k.xy.is_zero() && k.yy.is_zero()) return done(ConicType::Line);

  const std::vector<std::vector<BigRational>> affine = {{k.xx, k.xy * half}, {k.xy * half, k.yy}};
  const std::vector<std::vector<BigRational>> projective = {
      {k.xx, k.xy * half, k.x * half}, {k.xy * half, k.yy, k.y * half}, {k.x * half, k.y * half, k.one}};
  const Signature quad = signature(affine);
  const Signature proj = signature(projective);

  if (proj.rank() == 3) {
    if (quad.rank() == 1) return done(ConicType::Parabola);
    if (!quad.is_definite()) return done(ConicType::Hyperbola);
    return done(proj.is_definite() ? ConicType::ImaginaryEllipse : ConicType::Ellipse);
  }
  if (proj.rank() == 2 && proj.is_semidefinite()) {
    // Pair of complex conjugate lines: parallel ones meet only at infinity.
    if (quad.rank() == 1) return done(ConicType::GeomDisconnected);
    throw HypothesisError("conic is a pair of complex conjugate lines through a real point; not smooth");
  }
  if (proj.rank() == 2) {
    throw HypothesisError("conic is a pair of real lines; not a smooth connected curve");
  }
  throw HypothesisError("conic is a double line; not a smooth connected curve");
}

CurveInvariants curve_invariants(const CurveSpec& spec) {
  if (spec.kind() == CurveSpec::Kind::Conic) return classify_conic(spec).invariants;
  return hyperelliptic_invariants(spec);
}

// ---- parsing ----------------------------------------------------------------

namespace {

std::pair<std::string_view, std::size_t> trimmed(std::string_view s, std::size_t offset) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return {s, offset};
}

// If text is a bare power of y ("y", "y^3"), returns the exponent.
std::optional<int> bare_y_power(std::string_view text) {
  if (text.empty() || text.front() != 'y') return std::nullopt;
  text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty()) return 1;
  if (text.front() != '^') return std::nullopt;
  text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (text.empty() || text.size() > 3) return std::nullopt;
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  return std::stoi(std::string(text));
}

UniPoly univariate_in_x(const BiPoly& p) {
  std::vector<BigRational> c(static_cast<size_t>(std::max(p.degree_in(0), 0)) + 1);
  for (const auto& [e, coeff] : p.terms) c[static_cast<size_t>(e[0])] = coeff;
  return UniPoly(std::move(c));
}

}  // namespace

CurveSpec parse_curve(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("expected an equation containing '='", text.size());
  if (text.find('=', eq + 1) != std::string_view::npos) {
    throw ParseError("more than one '=' in equation", text.find('=', eq + 1));
  }
  auto [lhs, lhs_at] = trimmed(text.substr(0, eq), 0);
  auto [rhs, rhs_at] = trimmed(text.substr(eq + 1), eq + 1);
  if (lhs.empty()) throw ParseError("empty left-hand side", lhs_at);
  if (rhs.empty()) throw ParseError("empty right-hand side", rhs_at);

  if (auto power = bare_y_power(lhs); power && rhs.find('y') == std::string_view::npos) {
    if (*power != 2) {
      throw ParseError("hyperelliptic form needs y^2 on the left, got y-degree " + std::to_string(*power), lhs_at);
    }
    BiPoly q = parse_polynomial(rhs, "x", rhs_at);
    return CurveSpec::hyperelliptic(univariate_in_x(q));
  }

  BiPoly p = parse_polynomial(lhs, "xy", lhs_at) - parse_polynomial(rhs, "xy", rhs_at);
  if (p.total_degree() > 2) {
    throw ParseError("conic form needs total degree <= 2, got " + std::to_string(p.total_degree()) +
                         " (write y^2 = Q(x) for hyperelliptic curves)",
                     lhs_at);
  }
  ConicCoeffs k{p.coeff(2, 0), p.coeff(1, 1), p.coeff(0, 2), p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0)};
  return CurveSpec::conic(k);
}

CurveSpec parse_coefficient_list(std::string_view text) {
  std::vector<BigRational> coeffs;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    try {
      coeffs.push_back(BigRational::parse(item));
    } catch (const std::exception&) {
      throw ParseError("bad coefficient '" + std::string(item) + "'", start);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return CurveSpec::hyperelliptic(UniPoly(std::move(coeffs)));
}

}  // namespace realcurves
