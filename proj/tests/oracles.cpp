#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

using realcurves::AbGroupDescriptor;
using realcurves::BigRational;
using realcurves::UniPoly;

Coeffs from_poly(const UniPoly& p) {
  Coeffs out;
  for (const auto& c : p.coefficients()) out.push_back(c.raw());
  return out;
}

UniPoly to_poly(const Coeffs& c) {
  std::vector<BigRational> v;
  for (const auto& x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}

namespace {

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int degree(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

mpq_class determinant(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      mpq_class f = m[row][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return det;
}

int variations(const Coeffs& c) {
  int count = 0;
  int last = 0;
  for (const auto& x : c) {
    int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

mpq_class horner(const Coeffs& c, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// q(x + 1)
Coeffs shift_one(Coeffs a) {
  const int n = degree(a);
  for (int i = 0; i < n; ++i)
    for (int j = n - 1; j >= i; --j) a[static_cast<std::size_t>(j)] += a[static_cast<std::size_t>(j) + 1];
  return a;
}

// Upper bound on the roots of q in (0, 1): variations of (x+1)^n q(1/(x+1)).
int descartes_01(const Coeffs& q) {
  Coeffs rev(q.rbegin(), q.rend());
  return variations(shift_one(std::move(rev)));
}

int count_01(const Coeffs& q, int depth) {
  if (depth > 4000) throw std::runtime_error("isolation did not terminate; input not square-free?");
  const int v = descartes_01(q);
  if (v <= 1) return v;
  const int n = degree(q);
  // 2^n q(x/2) covers (0, 1/2); its shift by one covers (1/2, 1).
  Coeffs left = q;
  mpz_class scale = 1;
  for (int i = n; i >= 0; --i) {
    left[static_cast<std::size_t>(i)] *= scale;
    scale *= 2;
  }
  Coeffs right = shift_one(left);
  const int mid = horner(q, mpq_class(1, 2)) == 0 ? 1 : 0;
  return count_01(left, depth + 1) + mid + count_01(right, depth + 1);
}

}  // namespace

mpq_class resultant(const Coeffs& p0, const Coeffs& q0) {
  Coeffs p = p0, q = q0;
  trim(p);
  trim(q);
  const int m = degree(p), n = degree(q);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<mpq_class>> s(size, std::vector<mpq_class>(size, 0));
  // Rows hold descending coefficients, shifted one column per row.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = p[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = q[static_cast<std::size_t>(n - i)];
  return determinant(std::move(s));
}

int isolate_real_roots(const Coeffs& p0) {
  Coeffs p = p0;
  trim(p);
  const int n = degree(p);
  if (n < 1) return 0;
  mpq_class bound = 0;
  for (int i = 0; i < n; ++i) {
    mpq_class r = abs(p[static_cast<std::size_t>(i)] / p.back());
    if (r > bound) bound = r;
  }
  bound += 2;
  // q(x) = p(2*bound*x - bound) maps (0, 1) onto (-bound, bound).
  Coeffs q(1, 0);
  Coeffs lin{-bound, 2 * bound};
  for (int i = n; i >= 0; --i) {
    Coeffs next(q.size() + 1, 0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      next[j] += q[j] * lin[0];
      next[j + 1] += q[j] * lin[1];
    }
    next[0] += p[static_cast<std::size_t>(i)];
    q = std::move(next);
  }
  trim(q);
  return count_01(q, 0);
}

bool has_quadratic_factorization(const Coeffs& q) {
  if (q.size() != 5 || q[4] != 1) throw std::invalid_argument("expected a monic quartic");
  for (const auto& x : q)
    if (x.get_den() != 1) throw std::invalid_argument("expected integer coefficients");
  const mpz_class a0 = q[0].get_num(), a1 = q[1].get_num(), a2 = q[2].get_num(), a3 = q[3].get_num();
  if (a0 == 0) throw std::invalid_argument("expected a nonzero constant term");
  const mpz_class bound = abs(a0);
  for (mpz_class v = -bound; v <= bound; ++v) {
    if (v == 0 || a0 % v != 0) continue;
    const mpz_class w = a0 / v;
    // (x^2 + s x + v)(x^2 + t x + w): s + t = a3, s t = a2 - v - w.
    const mpz_class prod = a2 - v - w;
    const mpz_class disc = a3 * a3 - 4 * prod;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
    const mpz_class root = sqrt(disc);
    for (int sign : {1, -1}) {
      const mpz_class twice_s = a3 + sign * root;
      if (twice_s % 2 != 0) continue;
      const mpz_class s = twice_s / 2, t = a3 - s;
      if (s * w + t * v == a1) return true;
    }
  }
  return false;
}

MaybePt chord_add(const mpq_class& c2, const mpq_class& c1, const MaybePt& p, const MaybePt& q) {
  if (!p) return q;
  if (!q) return p;
  mpq_class lambda;
  if (p->v == q->v) {
    if (p->u != q->u || p->u == 0) return std::nullopt;
    lambda = (3 * p->v * p->v + 2 * c2 * p->v + c1) / (2 * p->u);
  } else {
    lambda = (q->u - p->u) / (q->v - p->v);
  }
  Pt r;
  r.v = lambda * lambda - c2 - p->v - q->v;
  mpq_class nu = p->u - lambda * p->v;
  r.u = -(lambda * r.v + nu);
  return r;
}

bool nagell_lutz_non_torsion(const mpq_class& c2, const mpq_class& c1, const MaybePt& p) {
  MaybePt acc = p;
  for (int k = 1; k <= 12 && acc; ++k) {
    if (acc->v.get_den() != 1 || acc->u.get_den() != 1) return true;
    acc = chord_add(c2, c1, acc, p);
  }
  return false;
}

AbGroupDescriptor parse_group(const std::string& text) {
  AbGroupDescriptor g;
  if (text == "0") return g;
  const std::string sep = " (+) ";
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    std::string tok = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    int count = 1;
    if (tok.front() == '(') {
      const std::size_t close = tok.find(")^");
      if (close == std::string::npos) throw std::invalid_argument("bad token " + tok);
      count = std::stoi(tok.substr(close + 2));
      tok = tok.substr(1, close - 1);
    } else if (tok.rfind("Z^", 0) == 0) {
      count = std::stoi(tok.substr(2));
      tok = "Z";
    }
    if (tok == "Z") {
      g.free_rank += count;
    } else if (tok == "Q/Z") {
      g.qz += count;
    } else if (tok.rfind("Z/", 0) == 0) {
      const int n = std::stoi(tok.substr(2));
      if (n == 2) {
        g.z2 += count;
      } else if (n == 4) {
        g.z4 += count;
      } else {
        g.zn = realcurves::CyclicPart{n, count};
      }
    } else {
      throw std::invalid_argument("bad token " + tok);
    }
    if (end == std::string::npos) break;
    start = end + sep.size();
  }
  return g;
}

UniPoly random_square_free(std::mt19937_64& rng, int degree, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (;;) {
    Coeffs c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) continue;
    Coeffs d;
    for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<long>(i));
    if (degree == 1 || resultant(c, d) != 0) return to_poly(c);
  }
}

}  // namespace oracle
