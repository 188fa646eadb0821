#pragma once

#include <stdexcept>
#include <utility>

#include "weylmin/poly.hpp"

namespace weylmin {

/// Element num/den of the field F(x). Canonical: gcd(num, den) = 1 and den
/// monic, so two values are equal iff their members are equal.
template <FieldCoefficient F>
class RationalFunction {
 public:
  using poly_type = Poly<F>;

  RationalFunction() : den_(F(1)) {}
  RationalFunction(F c) : num_(std::move(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  RationalFunction(T v) : RationalFunction(F(v)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)

  RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }

  const Poly<F>& num() const noexcept { return num_; }
  const Poly<F>& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  /// The constant value; only meaningful when is_constant().
  F constant() const { return num_.coeff(0); }

  RationalFunction operator-() const { return {-num_, den_, Canonical{}}; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    if (a.is_polynomial()) return {a.num_ * b.den_ + b.num_, b.den_, Canonical{}};
    if (b.is_polynomial()) return {a.num_ + b.num_ * a.den_, a.den_, Canonical{}};
    // only the common factor of the denominators can cancel
    const Poly<F> g = gcd(a.den_, b.den_);
    const Poly<F> ad = divexact(a.den_, g), bd = divexact(b.den_, g);
    Poly<F> num = a.num_ * bd + b.num_ * ad;
    if (g.degree() == 0) return {std::move(num), ad * bd, Canonical{}};
    RationalFunction tail(std::move(num), g);
    return {std::move(tail.num_), tail.den_ * ad * bd, Canonical{}};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_polynomial() && b.is_polynomial()) return {a.num_ * b.num_, Poly<F>(F(1)), Canonical{}};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// Quotient-rule derivative d/dx.
  RationalFunction derivative() const {
    if (is_polynomial()) return {num_.derivative(), den_, Canonical{}};
    return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
  }

  template <class Fn>
  RationalFunction map(Fn&& f) const {
    return {num_.map(f), den_.map(f)};
  }

 private:
  struct Canonical {};
  RationalFunction(Poly<F> num, Poly<F> den, Canonical) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Poly<F>(F(1));
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly<F>(F(1));
      return;
    }
    if (den_.degree() > 0) {
      Poly<F> g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
      }
    }
    const F lead = den_.leading();
    if (!(lead == F(1))) {
      const F inv = F(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  Poly<F> num_;
  Poly<F> den_;
};

}  // namespace weylmin
