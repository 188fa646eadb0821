#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "weylmin/gauss_rational.hpp"
#include "weylmin/poly.hpp"
#include "weylmin/rational_function.hpp"

namespace weylmin {

/// Polynomial in the formal central hermitian parameter hbar. Every Weyl
/// coefficient lives here.
using HbarPoly = Poly<GaussRational>;

/// Q(i)(hbar): coefficient field for rational functions of Lambda.
using HbarField = RationalFunction<GaussRational>;

inline HbarPoly hbar_monomial(const GaussRational& c, int degree) { return HbarPoly::monomial(c, degree); }
inline HbarPoly hbar() { return HbarPoly::monomial(GaussRational(1), 1); }

/// star on coefficients: conjugate each scalar, hbar is fixed.
inline HbarPoly conj(const HbarPoly& p) {
  return p.map([](const GaussRational& z) { return z.conj(); });
}
inline HbarField conj(const HbarField& f) {
  return f.map([](const GaussRational& z) { return z.conj(); });
}

/// p / hbar; the constant term must vanish.
inline HbarPoly divide_by_hbar(const HbarPoly& p) {
  if (p.is_zero()) return p;
  if (!p.coeff(0).is_zero()) throw std::logic_error("coefficient not divisible by hbar");
  std::vector<GaussRational> c(p.coeffs().begin() + 1, p.coeffs().end());
  return HbarPoly(std::move(c));
}

inline std::complex<double> to_complex(const GaussRational& z) {
  return {z.re().get_d(), z.im().get_d()};
}

inline std::complex<double> evaluate(const HbarPoly& p, double hbar_value) {
  std::complex<double> acc{};
  for (int d = p.degree(); d >= 0; --d) acc = acc * hbar_value + to_complex(p.coeff(d));
  return acc;
}

}  // namespace weylmin
