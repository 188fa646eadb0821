#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylmin/errors.hpp"
#include "weylmin/hbar.hpp"
#include "weylmin/poly.hpp"
#include "weylmin/rational_function.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

// r-holomorphic elements are quotients of polynomials in Lambda. They commute
// with each other, so their arithmetic is that of the field C(Lambda); here
// the scalars are Q(i)(hbar).

using PolyLambda = Poly<HbarField>;
using RatLambda = RationalFunction<HbarField>;

/// Vector (Phi^1, ..., Phi^n) of r-holomorphic components.
using PhiVector = std::vector<RatLambda>;

inline RatLambda lambda_var() { return RatLambda(PolyLambda::x()); }
inline RatLambda rat_constant(const GaussRational& c) { return RatLambda(HbarField(c)); }

inline RatLambda rf_derive(const RatLambda& a) { return a.derivative(); }

/// Yun's square-free factorization: p = lc * prod_i f_i^i, f_i square-free
/// and pairwise coprime. Entry i-1 holds f_i.
template <FieldCoefficient F>
std::vector<Poly<F>> squarefree_factors(const Poly<F>& p) {
  std::vector<Poly<F>> out;
  if (p.degree() <= 0) return out;
  Poly<F> dp = p.derivative();
  Poly<F> g = gcd(p, dp);
  Poly<F> c = divexact(p, g);
  Poly<F> d = divexact(dp, g) - c.derivative();
  while (c.degree() > 0) {
    Poly<F> a = gcd(c, d);
    out.push_back(a);
    c = divexact(c, a);
    d = divexact(d, a) - c.derivative();
  }
  return out;
}

template <FieldCoefficient F>
struct HermiteResult {
  RationalFunction<F> rational_part;  // g
  Poly<F> remainder_num;              // h = remainder_num / squarefree_den
  Poly<F> squarefree_den;
};

/// Hermite reduction (linear version): A/D = g' + h with the denominator of h
/// square-free. Requires gcd(A, D) = 1.
template <FieldCoefficient F>
HermiteResult<F> hermite_reduce(Poly<F> a, const Poly<F>& d) {
  using P = Poly<F>;
  RationalFunction<F> g;
  P d_minus = gcd(d, d.derivative());
  const P d_star = divexact(d, d_minus);
  while (d_minus.degree() > 0) {
    const P d_minus2 = gcd(d_minus, d_minus.derivative());
    const P d_minus_star = divexact(d_minus, d_minus2);
    const P lhs = -divexact(d_star * d_minus.derivative(), d_minus);
    auto [b, c] = solve_bezout(lhs, d_minus_star, a);
    a = c - divexact(b.derivative() * d_star, d_minus_star);
    g += RationalFunction<F>(b, d_minus);
    d_minus = d_minus2;
  }
  return {g, a, d_star};
}

namespace detail {

struct PrimitiveAttempt {
  bool integrable = false;
  RatLambda primitive;
  RatLambda obstruction;  // simple-pole part left after reduction
};

inline PolyLambda integrate_polynomial(const PolyLambda& p) {
  std::vector<HbarField> c(static_cast<std::size_t>(p.degree()) + 2);
  for (int k = 0; k <= p.degree(); ++k)
    c[static_cast<std::size_t>(k) + 1] = p.coeff(k) / HbarField(k + 1);
  return PolyLambda(std::move(c));
}

inline PrimitiveAttempt try_primitive(const RatLambda& a) {
  PrimitiveAttempt out;
  if (a.is_polynomial()) {
    out.integrable = true;
    out.primitive = RatLambda(integrate_polynomial(a.num()));
    return out;
  }
  auto hr = hermite_reduce(a.num(), a.den());
  auto [q, r] = divmod(hr.remainder_num, hr.squarefree_den);
  if (!r.is_zero()) {
    out.obstruction = RatLambda(r, hr.squarefree_den);
    return out;
  }
  out.integrable = true;
  out.primitive = hr.rational_part + RatLambda(integrate_polynomial(q));
  // Normalize P(0) = 0 whenever P is regular at the origin.
  const HbarField& d0 = out.primitive.den().coeff(0);
  if (!d0.is_zero()) out.primitive -= RatLambda(out.primitive.num().coeff(0) / d0);
  return out;
}

}  // namespace detail

/// True iff A has a primitive in C(Lambda), i.e. every residue vanishes.
/// Decided by Hermite reduction: the square-free remainder must be a polynomial.
inline bool rf_is_integrable(const RatLambda& a) { return detail::try_primitive(a).integrable; }

/// A primitive P with dP/dLambda = A. Normalized so P(0) = 0 when P is
/// regular at 0; otherwise no constant is added.
inline RatLambda rf_primitive(const RatLambda& a) {
  auto attempt = detail::try_primitive(a);
  if (!attempt.integrable)
    throw NotIntegrableError("no rational primitive: the simple-pole part with denominator of degree " +
                             std::to_string(attempt.obstruction.den().degree()) +
                             " has nonzero residues (logarithmic term)");
  return attempt.primitive;
}

/// Simple-pole remainder that blocks integration; zero when integrable.
inline RatLambda rf_obstruction(const RatLambda& a) { return detail::try_primitive(a).obstruction; }

/// (1/2 f (1 - g^2), i/2 f (1 + g^2), f g).
inline PhiVector phi_from_fg(const RatLambda& f, const RatLambda& g) {
  const RatLambda half = rat_constant(GaussRational(mpq_class(1, 2)));
  const RatLambda half_i = rat_constant(GaussRational(mpq_class(0), mpq_class(1, 2)));
  const RatLambda g2 = g * g;
  return {half * f * (RatLambda(1) - g2), half_i * f * (RatLambda(1) + g2), f * g};
}

/// Sum_i (Phi^i)^2 == 0 in C(Lambda).
inline bool isotropy_check(const PhiVector& phi) {
  RatLambda s;
  for (const auto& p : phi) s += p * p;
  return s.is_zero();
}

/// Inverse of phi_from_fg: f = Phi^1 - i Phi^2, g = Phi^3 / f.
inline std::pair<RatLambda, RatLambda> fg_from_phi(const PhiVector& phi) {
  if (phi.size() != 3) throw std::invalid_argument("fg_from_phi: expected three components");
  if (!isotropy_check(phi)) throw std::invalid_argument("fg_from_phi: Phi is not isotropic");
  const RatLambda f = phi[0] - rat_constant(GaussRational::i()) * phi[1];
  if (f.is_zero()) throw std::domain_error("fg_from_phi: Phi^1 - i Phi^2 = 0");
  return {f, phi[2] / f};
}

/// hbar-polynomial view of a coefficient; throws ScopeError if hbar appears
/// in its denominator.
inline HbarPoly as_hbar_poly(const HbarField& c) {
  if (!c.is_polynomial()) throw ScopeError("coefficient has hbar in its denominator");
  return c.num();
}

/// Embedding C[Lambda] -> A_hbar: coefficient of Lambda^k goes to term (k, 0).
inline WeylElement poly_to_weyl(const PolyLambda& p) {
  WeylElement r;
  for (int k = 0; k <= p.degree(); ++k) r.add_term({k, 0}, as_hbar_poly(p.coeff(k)));
  return r;
}

/// Embedding for r-holomorphic elements that are polynomials.
inline WeylElement rat_to_weyl(const RatLambda& a) {
  if (!a.is_polynomial()) throw ScopeError("element is a genuine fraction in Lambda, not a polynomial");
  return poly_to_weyl(a.num());
}

inline PolyLambda weyl_to_poly(const WeylElement& a) {
  if (!a.is_holomorphic_polynomial()) throw std::invalid_argument("element is not a polynomial in Lambda");
  std::vector<HbarField> c(static_cast<std::size_t>(a.degree() + 1));
  for (const auto& [key, coeff] : a.terms()) c[static_cast<std::size_t>(key.k)] = HbarField(coeff);
  return PolyLambda(std::move(c));
}

}  // namespace weylmin
