#include "realcurves/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace realcurves {

UniPoly::UniPoly(std::vector<BigRational> ascending) : coeffs_(std::move(ascending)) { trim(); }

UniPoly::UniPoly(std::initializer_list<BigRational> ascending) : coeffs_(ascending) { trim(); }

UniPoly UniPoly::constant(const BigRational& value) { return UniPoly({value}); }

UniPoly UniPoly::monomial(const BigRational& coeff, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<BigRational> c(static_cast<size_t>(power) + 1);
  c.back() = coeff;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::linear_root(const BigRational& root) { return UniPoly({-root, BigRational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return BigRational(0);
  return coeffs_[static_cast<size_t>(i)];
}

const BigRational& UniPoly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational UniPoly::eval(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  BigRational inv = leading().reciprocal();
  return *this * inv;
}

UniPoly UniPoly::translated(const BigRational& shift) const {
  // Horner in the polynomial ring: ((a_d)(x+s) + a_{d-1})(x+s) + ...
  UniPoly step({shift, BigRational(1)});
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= step;
    acc += UniPoly::constant(*it);
  }
  return acc;
}

UniPoly UniPoly::reflected() const {
  std::vector<BigRational> c = coeffs_;
  for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UniPoly(std::move(c));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (degree() < divisor.degree()) return {UniPoly{}, *this};
  std::vector<BigRational> rem = coeffs_;
  std::vector<BigRational> quot(static_cast<size_t>(degree() - divisor.degree()) + 1);
  const BigRational lead_inv = divisor.leading().reciprocal();
  const int dd = divisor.degree();
  for (int i = degree(); i >= dd; --i) {
    const BigRational& top = rem[static_cast<size_t>(i)];
    if (top.is_zero()) continue;
    BigRational factor = top * lead_inv;
    quot[static_cast<size_t>(i - dd)] = factor;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<size_t>(i - dd + j)] -= factor * divisor.coeffs_[static_cast<size_t>(j)];
    }
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = coeffs_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == BigRational(1);
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!unit) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

UniPoly operator-(const UniPoly& a) { return a * BigRational(-1); }

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = p;
  UniPoly b = q;
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.monic();  // keeps coefficient growth in check
  }
  return a.monic();
}

bool is_square_free(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_square_free: zero polynomial");
  return poly_gcd(p, p.derivative()).degree() == 0;
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("square_free_part: zero polynomial");
  if (p.is_constant()) return UniPoly::constant(BigRational(1));
  return p.divmod(poly_gcd(p, p.derivative())).first.monic();
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  auto normalized = [](const UniPoly& f) { return f * f.leading().abs().reciprocal(); };
  chain.push_back(normalized(p));
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(normalized(d));
  while (true) {
    const UniPoly& a = chain[chain.size() - 2];
    const UniPoly& b = chain.back();
    UniPoly r = a.divmod(b).second;
    if (r.is_zero()) break;
    chain.push_back(normalized(-r));
  }
  return chain;
}

int sign_variations(std::span<const UniPoly> chain, const BigRational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& f : chain) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

BigRational cauchy_bound(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  BigRational best(0);
  const BigRational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    BigRational r = (p.coeff(i) / lead).abs();
    if (r > best) best = r;
  }
  return best + BigRational(1);
}

int count_roots_in(std::span<const UniPoly> chain, const BigRational& lo, const BigRational& hi) {
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (!is_square_free(p)) throw std::invalid_argument("count_real_roots: polynomial is not square-free");
  if (p.degree() == 0) return 0;
  const auto chain = sturm_sequence(p);
  const BigRational m = cauchy_bound(p) + BigRational(1);
  return count_roots_in(chain, -m, m);
}

namespace {

// Integer roots of a square-free integer polynomial, found by bisecting
// integer intervals (lo, hi] until each holds one root and has width one.
void collect_integer_roots(const UniPoly& f, std::span<const UniPoly> chain, const BigInt& lo,
                           const BigInt& hi, int count, std::vector<BigInt>& out) {
  if (count <= 0) return;
  if (hi - lo == 1) {
    if (f.eval(BigRational(hi)).is_zero()) out.push_back(hi);
    return;
  }
  BigInt mid;
  BigInt sum = lo + hi;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), sum.get_mpz_t(), 1);
  int left = count_roots_in(chain, BigRational(lo), BigRational(mid));
  collect_integer_roots(f, chain, lo, mid, left, out);
  collect_integer_roots(f, chain, mid, hi, count - left, out);
}

}  // namespace

std::vector<BigRational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
  const UniPoly sf = square_free_part(p);
  const int n = sf.degree();
  if (n <= 0) return {};

  // Clear denominators: lcm * sf has integer coefficients and leading term lcm.
  BigInt lcm = 1;
  for (const auto& c : sf.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<BigInt> a;
  for (const auto& c : sf.coefficients()) a.push_back((c * BigRational(lcm)).numerator());

  // Substitute x = y / lead: lead^(n-1) * f(y / lead) is monic with integer
  // coefficients, so all of its rational roots are integers.
  const BigInt lead = a.back();
  std::vector<BigRational> b(static_cast<size_t>(n) + 1);
  BigInt scale = 1;
  for (int i = n - 1; i >= 0; --i) {
    b[static_cast<size_t>(i)] = BigRational(BigInt(a[static_cast<size_t>(i)] * scale));
    scale *= lead;
  }
  b[static_cast<size_t>(n)] = BigRational(1);
  const UniPoly monic_int(std::move(b));

  const auto chain = sturm_sequence(monic_int);
  const BigInt bound = cauchy_bound(monic_int).ceil() + 1;
  std::vector<BigInt> ints;
  const BigInt lo = -bound;
  int total = count_roots_in(chain, BigRational(lo), BigRational(bound));
  collect_integer_roots(monic_int, chain, lo, bound, total, ints);

  std::vector<BigRational> roots;
  roots.reserve(ints.size());
  for (const auto& y : ints) roots.emplace_back(y, lead);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace realcurves
