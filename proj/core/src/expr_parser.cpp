#include "realcurves/expr_parser.hpp"

#include <algorithm>
#include <cctype>

#include "realcurves/errors.hpp"

namespace realcurves {

BiPoly BiPoly::constant(const BigRational& c) {
  BiPoly p;
  if (!c.is_zero()) p.terms[{0, 0}] = c;
  return p;
}

BiPoly BiPoly::variable(int index) {
  BiPoly p;
  Exponents e{0, 0};
  e[static_cast<size_t>(index)] = 1;
  p.terms[e] = BigRational(1);
  return p;
}

BigRational BiPoly::coeff(int i, int j) const {
  auto it = terms.find({i, j});
  return it == terms.end() ? BigRational(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, e[0] + e[1]);
  return d;
}

int BiPoly::degree_in(int index) const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, e[static_cast<size_t>(index)]);
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms) {
    BigRational& slot = terms[e];
    slot += c;
    if (slot.is_zero()) terms.erase(e);
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [e, c] : o.terms) {
    BigRational& slot = terms[e];
    slot -= c;
    if (slot.is_zero()) terms.erase(e);
  }
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      BiPoly::Exponents e{ea[0] + eb[0], ea[1] + eb[1]};
      BigRational& slot = out.terms[e];
      slot += ca * cb;
      if (slot.is_zero()) out.terms.erase(e);
    }
  }
  return out;
}

namespace {

constexpr int kMaxExponent = 64;

class Parser {
 public:
  Parser(std::string_view text, std::string_view vars, std::size_t base)
      : text_(text), vars_(vars), base_(base) {}

  BiPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    BiPoly p = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
    return p;
  }

 private:
  BiPoly expr() {
    BiPoly acc = term();
    while (true) {
      skip_ws();
      if (at_end()) return acc;
      char ch = peek();
      if (ch == '+') {
        ++pos_;
        acc += term();
      } else if (ch == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (true) {
      skip_ws();
      if (at_end()) return acc;
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (starts_factor(ch)) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    skip_ws();
    if (at_end()) fail("expected a term");
    char ch = peek();
    if (ch == '-') {
      ++pos_;
      return BiPoly::constant(BigRational(-1)) * unary();
    }
    if (ch == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = primary();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer exponent");
      std::string digits = read_digits();
      if (digits.size() > 3 || std::stoi(digits) > kMaxExponent) {
        fail_at("exponent too large", start);
      }
      int n = std::stoi(digits);
      BiPoly out = BiPoly::constant(BigRational(1));
      for (int i = 0; i < n; ++i) out = out * base;
      return out;
    }
    return base;
  }

  BiPoly primary() {
    skip_ws();
    if (at_end()) fail("expected a term");
    char ch = peek();
    if (ch == '(') {
      std::size_t open = pos_;
      ++pos_;
      BiPoly inner = expr();
      skip_ws();
      if (at_end() || peek() != ')') fail_at("unbalanced parenthesis", open);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      BigInt num(read_digits(), 10);
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t den_at = pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
          fail("division is only allowed inside a rational literal p/q");
        }
        BigInt den(read_digits(), 10);
        if (den == 0) fail_at("zero denominator", den_at);
        return BiPoly::constant(BigRational(num, den));
      }
      return BiPoly::constant(BigRational(num));
    }
    auto v = vars_.find(ch);
    if (v != std::string_view::npos && std::isalpha(static_cast<unsigned char>(ch))) {
      ++pos_;
      return BiPoly::variable(static_cast<int>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      fail(std::string("unknown variable '") + ch + "'");
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  bool starts_factor(char ch) const {
    return ch == '(' || std::isdigit(static_cast<unsigned char>(ch)) ||
           std::isalpha(static_cast<unsigned char>(ch));
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, base_ + at); }

  std::string_view text_;
  std::string_view vars_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_polynomial(std::string_view text, std::string_view vars, std::size_t base_offset) {
  return Parser(text, vars, base_offset).parse();
}

}  // namespace realcurves
