#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "weylmin/errors.hpp"
#include "weylmin/holomorphic.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

// Expression grammar (precedence high to low: ^, unary -, * /, + -):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'i' | 'h' | 'L' | 'Ls' | 'U' | 'V' | '(' expr ')'
//
// Products keep their written order; nothing is reordered at parse time.

struct Expr {
  enum class Kind { number, imag, hbar, lambda, lambda_star, u, v, neg, add, sub, mul, div, pow };

  Kind kind = Kind::number;
  std::size_t pos = 0;
  mpz_class value;   // number
  int exponent = 0;  // pow
  std::vector<Expr> args;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = parse_expr();
    skip_ws();
    if (pos_ < src_.size()) throw ParseError(std::string("unexpected '") + src_[pos_] + "'", pos_);
    return e;
  }

 private:
  static constexpr int kMaxExponent = 4096;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> args = {}) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.args = std::move(args);
    return e;
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) lhs = node(Expr::Kind::add, at, {std::move(lhs), parse_term()});
      else if (accept('-')) lhs = node(Expr::Kind::sub, at, {std::move(lhs), parse_term()});
      else return lhs;
    }
  }

  Expr parse_term() {
    Expr lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) lhs = node(Expr::Kind::mul, at, {std::move(lhs), parse_unary()});
      else if (accept('/')) lhs = node(Expr::Kind::div, at, {std::move(lhs), parse_unary()});
      else return lhs;
    }
  }

  Expr parse_unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return node(Expr::Kind::neg, at, {parse_unary()});
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == '-') throw ParseError("negative exponent", pos_);
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
      throw ParseError("exponent must be a nonnegative integer literal", pos_);
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::string digits(src_.substr(start, pos_ - start));
    if (digits.size() > 4 || std::stoi(digits) > kMaxExponent) throw ParseError("exponent too large", start);
    Expr e = node(Expr::Kind::pow, at, {std::move(base)});
    e.exponent = std::stoi(digits);
    return e;
  }

  Expr parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", pos_);
    const std::size_t at = pos_;
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = parse_expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ < src_.size() && src_[pos_] == '.') throw ParseError("decimal literals are not supported; use a/b", pos_);
      Expr e = node(Expr::Kind::number, at);
      e.value = mpz_class(std::string(src_.substr(at, pos_ - at)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view id = src_.substr(at, pos_ - at);
      if (id == "i") return node(Expr::Kind::imag, at);
      if (id == "h") return node(Expr::Kind::hbar, at);
      if (id == "L") return node(Expr::Kind::lambda, at);
      if (id == "Ls") return node(Expr::Kind::lambda_star, at);
      if (id == "U") return node(Expr::Kind::u, at);
      if (id == "V") return node(Expr::Kind::v, at);
      throw ParseError("unknown symbol '" + std::string(id) + "'", at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view src) { return detail::ExprParser(src).parse(); }

/// Evaluates into A_hbar. Division is only accepted by a nonzero numeric
/// constant (so that rendered rational coefficients parse back).
inline WeylElement eval_weyl(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return WeylElement(GaussRational(mpq_class(e.value)));
    case K::imag: return WeylElement(GaussRational::i());
    case K::hbar: return WeylElement(hbar());
    case K::lambda: return WeylElement::lambda();
    case K::lambda_star: return WeylElement::lambda_star();
    case K::u: return WeylElement::U();
    case K::v: return WeylElement::V();
    case K::neg: return -eval_weyl(e.args[0]);
    case K::add: return eval_weyl(e.args[0]) + eval_weyl(e.args[1]);
    case K::sub: return eval_weyl(e.args[0]) - eval_weyl(e.args[1]);
    case K::mul: return eval_weyl(e.args[0]) * eval_weyl(e.args[1]);
    case K::pow: return pow(eval_weyl(e.args[0]), e.exponent);
    case K::div: {
      const WeylElement den = eval_weyl(e.args[1]);
      const HbarPoly c = den.coeff(0, 0);
      if (den.size() != 1 || c.degree() != 0)
        throw ParseError("division in weyl mode is only allowed by a nonzero numeric constant", e.pos);
      return eval_weyl(e.args[0]).scaled(HbarPoly(GaussRational(1) / c.coeff(0)));
    }
  }
  throw ParseError("corrupt expression", e.pos);
}

/// Evaluates into C(Lambda) with Q(i)(hbar) scalars; U, V and Ls are rejected.
inline RatLambda eval_rat(const Expr& e) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::number: return rat_constant(GaussRational(mpq_class(e.value)));
    case K::imag: return rat_constant(GaussRational::i());
    case K::hbar: return RatLambda(HbarField(hbar()));
    case K::lambda: return lambda_var();
    case K::lambda_star: throw ParseError("Ls is not r-holomorphic; only L may appear here", e.pos);
    case K::u: throw ParseError("U is not r-holomorphic; only L may appear here", e.pos);
    case K::v: throw ParseError("V is not r-holomorphic; only L may appear here", e.pos);
    case K::neg: return -eval_rat(e.args[0]);
    case K::add: return eval_rat(e.args[0]) + eval_rat(e.args[1]);
    case K::sub: return eval_rat(e.args[0]) - eval_rat(e.args[1]);
    case K::mul: return eval_rat(e.args[0]) * eval_rat(e.args[1]);
    case K::pow: {
      const RatLambda b = eval_rat(e.args[0]);
      RatLambda r(1);
      for (int k = 0; k < e.exponent; ++k) r *= b;
      return r;
    }
    case K::div: {
      const RatLambda den = eval_rat(e.args[1]);
      if (den.is_zero()) throw ParseError("division by zero", e.pos);
      return eval_rat(e.args[0]) / den;
    }
  }
  throw ParseError("corrupt expression", e.pos);
}

inline WeylElement parse_weyl(std::string_view src) { return eval_weyl(parse_expr(src)); }
inline RatLambda parse_rat(std::string_view src) { return eval_rat(parse_expr(src)); }

/// Polynomial in Lambda; genuine fractions raise ParseError.
inline PolyLambda parse_poly_lambda(std::string_view src) {
  RatLambda r = parse_rat(src);
  if (!r.is_polynomial()) throw ParseError("expected a polynomial in L, got a fraction");
  return r.num();
}

}  // namespace weylmin
