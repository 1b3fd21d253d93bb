#include "realcurves/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace realcurves {

namespace {

bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_decimal_integer(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  BigInt den = parse_integer(text.substr(slash + 1));
  return BigRational(parse_integer(text.substr(0, slash)), den);
}

BigRational BigRational::abs() const {
  BigRational out;
  out.q_ = ::abs(q_);
  return out;
}

BigRational BigRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return BigRational(q_.get_den(), q_.get_num());
}

BigRational BigRational::pow(unsigned exponent) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return BigRational(n, d);
}

std::optional<BigRational> BigRational::sqrt_exact() const {
  if (sign() < 0) return std::nullopt;
  const BigInt& n = q_.get_num();
  const BigInt& d = q_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) {
    return std::nullopt;
  }
  BigInt rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return BigRational(rn, rd);
}

BigInt BigRational::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

BigInt BigRational::ceil() const {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational operator-(const BigRational& a) {
  BigRational out;
  out.q_ = -a.q_;
  return out;
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  int c = cmp(a.q_, b.q_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const BigRational& value) { return os << value.str(); }

BigRational abs(const BigRational& value) { return value.abs(); }

}  // namespace realcurves
