#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylmin/errors.hpp"
#include "weylmin/holomorphic.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

using WeylVector = std::vector<WeylElement>;

/// Generating data of a surface. `primitives` holds P^i in C[Lambda] with
/// X^i = x^i + Re P^i; it is what makes the conjugate surface computable.
struct Provenance {
  std::string kind = "raw";  // fg | F | Ftilde | pair | conjugate | raw
  std::vector<std::pair<std::string, std::string>> inputs;
  WeylVector primitives;
};

/// A hermitian vector X = (X^1, ..., X^n) in A_hbar^n, n = 3 or 4.
/// components[i] already includes offsets[i] * 1.
struct Surface {
  WeylVector components;
  std::vector<mpq_class> offsets;
  Provenance provenance;

  std::size_t size() const noexcept { return components.size(); }
};

struct FirstFundamental {
  WeylElement E, F, G;
};

struct Witness {
  std::string label;
  WeylElement residual;
};

struct VerificationReport {
  std::vector<bool> hermitian;
  std::vector<bool> harmonic;
  bool conformal = false;
  std::vector<Witness> witnesses;

  bool passes() const {
    for (bool b : hermitian)
      if (!b) return false;
    for (bool b : harmonic)
      if (!b) return false;
    return conformal;
  }
};

inline WeylVector derive(const WeylVector& x, Direction dir) {
  WeylVector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(derive(c, dir));
  return r;
}

/// <X, Y> = 1/2 sum_i (X^i Y^i + Y^i X^i).
inline WeylElement bilinear(const WeylVector& x, const WeylVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("bilinear: length mismatch");
  WeylElement s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i] + y[i] * x[i];
  return GaussRational(mpq_class(1, 2)) * s;
}

inline FirstFundamental first_fundamental(const WeylVector& x) {
  const WeylVector xu = derive(x, Direction::u);
  const WeylVector xv = derive(x, Direction::v);
  return {bilinear(xu, xu), bilinear(xu, xv), bilinear(xv, xv)};
}
inline FirstFundamental first_fundamental(const Surface& s) { return first_fundamental(s.components); }

/// Phi = 2 d X, componentwise.
inline WeylVector phi_of(const WeylVector& x) {
  WeylVector r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(GaussRational(2) * derive(c, Direction::d));
  return r;
}

/// Exact check of the defining conditions: hermitian components,
/// Delta_0 X^i = 0, E = G and F = 0. Failures carry their residuals.
inline VerificationReport verify_minimal(const Surface& s) {
  VerificationReport rep;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& x = s.components[i];
    const std::string idx = std::to_string(i + 1);
    const WeylElement anti = x - star(x);
    rep.hermitian.push_back(anti.is_zero());
    if (!anti.is_zero()) rep.witnesses.push_back({"X" + idx + " - star(X" + idx + ")", anti});
    const WeylElement lap = laplace0(x);
    rep.harmonic.push_back(lap.is_zero());
    if (!lap.is_zero()) rep.witnesses.push_back({"laplace0(X" + idx + ")", lap});
  }
  const auto fff = first_fundamental(s);
  const WeylElement eg = fff.E - fff.G;
  rep.conformal = eg.is_zero() && fff.F.is_zero();
  if (!eg.is_zero()) rep.witnesses.push_back({"E - G", eg});
  if (!fff.F.is_zero()) rep.witnesses.push_back({"F", fff.F});
  return rep;
}

namespace detail {

inline std::vector<mpq_class> resolve_offsets(std::vector<mpq_class> offsets, std::size_t n) {
  if (offsets.empty()) offsets.assign(n, mpq_class(0));
  if (offsets.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " offsets, got " + std::to_string(offsets.size()));
  return offsets;
}

/// X^i = x^i + Re P^i with P^i the given primitives; checks 2 d X^i = dP^i.
inline Surface assemble(WeylVector primitives, std::vector<mpq_class> offsets, std::string kind,
                        std::vector<std::pair<std::string, std::string>> inputs) {
  Surface s;
  s.offsets = resolve_offsets(std::move(offsets), primitives.size());
  for (std::size_t i = 0; i < primitives.size(); ++i) {
    WeylElement x = re(primitives[i]) + WeylElement(GaussRational(s.offsets[i]));
    if (!(GaussRational(2) * derive(x, Direction::d) == derive(primitives[i], Direction::d)))
      throw std::logic_error("assemble: 2 d X != dP");
    s.components.push_back(std::move(x));
  }
  s.provenance = {std::move(kind), std::move(inputs), std::move(primitives)};
  return s;
}

inline WeylVector primitives_of(const PhiVector& phi) {
  WeylVector out;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const std::string name = "Phi^" + std::to_string(i + 1);
    RatLambda p;
    try {
      p = rf_primitive(phi[i]);
    } catch (const NotIntegrableError& e) {
      throw NotIntegrableError(name + " is not integrable: " + e.what());
    }
    if (!p.is_polynomial())
      throw ScopeError("the primitive of " + name + " is a genuine fraction in Lambda; "
                       "its real part needs noncommutative fraction arithmetic");
    try {
      out.push_back(rat_to_weyl(p));
    } catch (const ScopeError& e) {
      throw ScopeError("the primitive of " + name + ": " + e.what());
    }
  }
  return out;
}

inline WeylElement without_constant(WeylElement a) {
  const HbarPoly c0 = a.coeff(0, 0);
  if (!c0.is_zero()) a -= WeylElement(c0);
  return a;
}

}  // namespace detail

/// Surface X^i = x^i + Re int Phi^i dLambda for r-holomorphic Phi whose
/// primitives are polynomials.
inline Surface surface_from_phi(const PhiVector& phi, std::vector<mpq_class> offsets, std::string kind,
                                std::vector<std::pair<std::string, std::string>> inputs) {
  return detail::assemble(detail::primitives_of(phi), std::move(offsets), std::move(kind), std::move(inputs));
}

/// Weierstrass data (f, g): Phi = (f(1-g^2)/2, i f(1+g^2)/2, f g).
inline Surface surface_from_fg(const RatLambda& f, const RatLambda& g, std::vector<mpq_class> offsets = {},
                               std::vector<std::pair<std::string, std::string>> inputs = {}) {
  return surface_from_phi(phi_from_fg(f, g), std::move(offsets), "fg", std::move(inputs));
}

/// Single r-holomorphic F: Phi = ((1-L^2) F, i (1+L^2) F, 2 L F).
inline Surface surface_from_F(const RatLambda& F, std::vector<mpq_class> offsets = {},
                              std::vector<std::pair<std::string, std::string>> inputs = {}) {
  const RatLambda L = lambda_var();
  const RatLambda one(1), i = rat_constant(GaussRational::i());
  PhiVector phi{(one - L * L) * F, i * (one + L * L) * F, RatLambda(2) * L * F};
  return surface_from_phi(phi, std::move(offsets), "F", std::move(inputs));
}

/// Integrated form for holomorphic Ft with d^3 Ft = F:
///   Omega^1 = (1 - L^2) Ft'' + 2 L Ft' - 2 Ft
///   Omega^2 = i (1 + L^2) Ft'' - 2i L Ft' + 2i Ft
///   Omega^3 = 2 L Ft'' - 2 Ft'
/// The constant terms of Omega^i are dropped so that the result coincides with
/// surface_from_F(Ft''') for equal offsets.
inline Surface surface_from_Ftilde(const PolyLambda& ft, std::vector<mpq_class> offsets = {},
                                   std::vector<std::pair<std::string, std::string>> inputs = {}) {
  const PolyLambda L = PolyLambda::x();
  const PolyLambda one(1);
  const PolyLambda i(HbarField(GaussRational::i()));
  const PolyLambda d1 = ft.derivative(), d2 = d1.derivative();
  const PolyLambda two(2);
  const PolyLambda omega1 = (one - L * L) * d2 + two * L * d1 - two * ft;
  const PolyLambda omega2 = i * (one + L * L) * d2 - two * i * L * d1 + two * i * ft;
  const PolyLambda omega3 = two * L * d2 - two * d1;
  WeylVector prims;
  for (const auto* om : {&omega1, &omega2, &omega3}) prims.push_back(detail::without_constant(poly_to_weyl(*om)));
  return detail::assemble(std::move(prims), std::move(offsets), "Ftilde", std::move(inputs));
}

/// Four-dimensional surface (Re f, Im f, Re g, Im g) for holomorphic f, g.
inline Surface surface_from_pair(const PolyLambda& f, const PolyLambda& g, std::vector<mpq_class> offsets = {},
                                 std::vector<std::pair<std::string, std::string>> inputs = {}) {
  const WeylElement wf = poly_to_weyl(f), wg = poly_to_weyl(g);
  const GaussRational mi(mpq_class(0), mpq_class(-1));
  // Re(-i f) = Im f
  return detail::assemble({wf, mi * wf, wg, mi * wg}, std::move(offsets), "pair", std::move(inputs));
}

/// Higher-order Enneper surface: f = 2, g = Lambda^n.
inline Surface enneper(int n, std::vector<mpq_class> offsets = {}) {
  if (n < 0) throw std::invalid_argument("enneper: n must be nonnegative");
  RatLambda g(PolyLambda::monomial(HbarField(1), n));
  return surface_from_fg(RatLambda(2), g, std::move(offsets), {{"f", "2"}, {"g", "L^" + std::to_string(n)}});
}

/// Conjugate surface Xt^i = x^i + Im P^i, satisfying d_u X = d_v Xt and
/// d_v X = -d_u Xt. Its own primitives are -i P^i.
inline Surface conjugate_surface(const Surface& s) {
  const auto& prims = s.provenance.primitives;
  if (prims.size() != s.size())
    throw ScopeError("conjugate: surface has no stored primitives (provenance '" + s.provenance.kind + "')");
  const GaussRational mi(mpq_class(0), mpq_class(-1));
  WeylVector conj_prims;
  for (const auto& p : prims) conj_prims.push_back(mi * p);
  auto inputs = s.provenance.inputs;
  inputs.emplace_back("of", s.provenance.kind);
  return detail::assemble(std::move(conj_prims), s.offsets, "conjugate", std::move(inputs));
}

/// N = (L + L*, -i (L - L*), (L L* + L* L)/2 - 1).
inline WeylVector normal_element() {
  const WeylElement L = WeylElement::lambda(), Ls = WeylElement::lambda_star();
  const GaussRational mi(mpq_class(0), mpq_class(-1));
  return {L + Ls, mi * (L - Ls), GaussRational(mpq_class(1, 2)) * (L * Ls + Ls * L) - WeylElement::one()};
}

inline bool check_normal(const WeylVector& x, const WeylVector& n) {
  if (x.size() != 3 || n.size() != 3) throw std::invalid_argument("check_normal: three components required");
  return bilinear(derive(x, Direction::u), n).is_zero() && bilinear(derive(x, Direction::v), n).is_zero();
}
inline bool check_normal(const Surface& s, const WeylVector& n) { return check_normal(s.components, n); }

/// Unnormalized mean curvature H0(N) = -<d_u X, d_u N>/2 - <d_v X, d_v N>/2.
inline WeylElement mean_curvature_H0(const WeylVector& x, const WeylVector& n) {
  if (x.size() != 3 || n.size() != 3) throw std::invalid_argument("mean_curvature_H0: three components required");
  const WeylElement s = bilinear(derive(x, Direction::u), derive(n, Direction::u)) +
                        bilinear(derive(x, Direction::v), derive(n, Direction::v));
  return GaussRational(mpq_class(-1, 2)) * s;
}
inline WeylElement mean_curvature_H0(const Surface& s, const WeylVector& n) {
  return mean_curvature_H0(s.components, n);
}

}  // namespace weylmin
