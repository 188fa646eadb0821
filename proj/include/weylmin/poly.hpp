#pragma once

#include <algorithm>
#include <cassert>
#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylmin {

/// Coefficient requirements for Poly: a commutative ring with a zero test.
/// Division routines additionally need operator/ (a field).
template <class F>
concept Coefficient = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  F(1);
};

template <class F>
concept FieldCoefficient = Coefficient<F> && requires(const F a, const F b) {
  { a / b } -> std::convertible_to<F>;
};

/// Dense univariate polynomial c[0] + c[1] x + ... with trailing zeros trimmed,
/// so the zero polynomial has an empty coefficient vector and degree -1.
template <Coefficient F>
class Poly {
 public:
  using coefficient_type = F;

  Poly() = default;
  Poly(F c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  template <std::integral T>
  Poly(T v) : Poly(F(v)) {}  // NOLINT(google-explicit-constructor)

  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(F c, int degree) {
    if (c.is_zero()) return {};
    Poly p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, F{});
    p.c_.back() = std::move(c);
    return p;
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == F(1); }

  const F& coeff(int d) const {
    static const F zero{};
    if (d < 0 || d > degree()) return zero;
    return c_[static_cast<std::size_t>(d)];
  }
  const F& leading() const { return coeff(degree()); }
  const std::vector<F>& coeffs() const noexcept { return c_; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] + o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F{});
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] = c_[k] - o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> out(a.c_.size() + b.c_.size() - 1, F{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const F& s) const {
    if (s.is_zero()) return {};
    Poly r = *this;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Formal derivative d/dx.
  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * F(static_cast<long>(k));
    return Poly(std::move(out));
  }

  F evaluate(const F& x) const {
    F acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Applies f to each coefficient (e.g. conjugation).
  template <class Fn>
  Poly map(Fn&& f) const {
    std::vector<F> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <FieldCoefficient F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const int db = b.degree();
  if (a.degree() < db) return {Poly<F>{}, a};
  std::vector<F> rem = a.coeffs();
  std::vector<F> quo(static_cast<std::size_t>(a.degree() - db) + 1, F{});
  const F lead = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const F& top = rem[static_cast<std::size_t>(d)];
    if (top.is_zero()) continue;
    const F q = top / lead;
    quo[static_cast<std::size_t>(d - db)] = q;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(d - db + j)];
      slot = slot - q * b.coeff(j);
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<F>(std::move(quo)), Poly<F>(std::move(rem))};
}

/// Exact quotient; throws if b does not divide a.
template <FieldCoefficient F>
Poly<F> divexact(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

template <FieldCoefficient F>
Poly<F> monic(const Poly<F>& p) {
  if (p.is_zero()) return p;
  return p.scaled(F(1) / p.leading());
}

/// Monic gcd (zero only when both inputs are zero).
template <FieldCoefficient F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  a = monic(a);
  b = monic(b);
  while (!b.is_zero()) {
    auto r = monic(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <FieldCoefficient F>
struct ExtGcd {
  Poly<F> s, t, g;  // s*a + t*b = g, g monic
};

template <FieldCoefficient F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = F(1), s1{};
  Poly<F> t0{}, t1 = F(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  const F inv = F(1) / r0.leading();
  return {s0.scaled(inv), t0.scaled(inv), r0.scaled(inv)};
}

/// Solves s*a + t*b = c with deg s < deg b. Requires gcd(a, b) | c.
template <FieldCoefficient F>
std::pair<Poly<F>, Poly<F>> solve_bezout(const Poly<F>& a, const Poly<F>& b, const Poly<F>& c) {
  auto e = ext_gcd(a, b);
  auto [q, r] = divmod(c, e.g);
  if (!r.is_zero()) throw std::logic_error("solve_bezout: gcd does not divide right-hand side");
  Poly<F> s = e.s * q;
  Poly<F> t = e.t * q;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    auto [q2, r2] = divmod(s, b);
    s = std::move(r2);
    t += q2 * a;
  }
  return {s, t};
}

}  // namespace weylmin
