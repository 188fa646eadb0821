#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylmin/holomorphic.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

// Text renderings use the expression syntax accepted by the parser
// (L = Lambda, Ls = Lambda*, h = hbar, i = imaginary unit), so they round-trip.

namespace detail {

inline std::string power(const std::string& sym, int e) {
  if (e == 0) return {};
  return e == 1 ? sym : sym + "^" + std::to_string(e);
}

inline std::string join_factors(std::initializer_list<std::string> parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    if (!s.empty()) s += "*";
    s += p;
  }
  return s;
}

/// A coefficient of the form +-q, +-q*i times hbar^d renders without parens.
struct SignedFactor {
  bool negative = false;
  std::string factor;  // empty means 1
};

inline std::optional<SignedFactor> simple_factor(const HbarPoly& p) {
  int deg = -1;
  for (int d = 0; d <= p.degree(); ++d) {
    if (p.coeff(d).is_zero()) continue;
    if (deg >= 0) return std::nullopt;
    deg = d;
  }
  if (deg < 0) return std::nullopt;
  const GaussRational& c = p.coeff(deg);
  if (!c.is_real() && sgn(c.re()) != 0) return std::nullopt;
  const bool imaginary = !c.is_real();
  mpq_class mag = imaginary ? c.im() : c.re();
  SignedFactor f;
  f.negative = sgn(mag) < 0;
  if (f.negative) mag = -mag;
  std::string num = mag == 1 ? std::string{} : mag.get_str();
  f.factor = join_factors({num, imaginary ? "i" : "", power("h", deg)});
  return f;
}

/// Sum of (coefficient, monomial) pairs in expression syntax.
inline std::string render_sum(const std::vector<std::pair<HbarPoly, std::string>>& terms,
                              std::string (*render_coeff)(const HbarPoly&)) {
  std::string out;
  for (const auto& [c, mono] : terms) {
    bool negative = false;
    std::string body;
    if (auto sf = simple_factor(c)) {
      negative = sf->negative;
      body = join_factors({sf->factor, mono});
      if (body.empty()) body = "1";
    } else if (mono.empty()) {
      body = render_coeff(c);
      if (out.empty()) {
        out = body;
        continue;
      }
      body = "(" + body + ")";
    } else {
      body = "(" + render_coeff(c) + ")*" + mono;
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// c0 + c1*h + c2*h^2 ...
inline std::string render_hbar(const HbarPoly& p) {
  std::vector<std::pair<HbarPoly, std::string>> terms;
  for (int d = 0; d <= p.degree(); ++d) {
    const GaussRational& c = p.coeff(d);
    if (c.is_zero()) continue;
    if (c.is_real() || sgn(c.re()) == 0) {
      terms.emplace_back(hbar_monomial(c, d), std::string{});
    } else {
      // split mixed scalars so each summand stays simple
      terms.emplace_back(hbar_monomial(GaussRational(c.re()), d), std::string{});
      terms.emplace_back(hbar_monomial(GaussRational(mpq_class(0), c.im()), d), std::string{});
    }
  }
  return detail::render_sum(terms, nullptr);
}

/// Normal-form text, e.g. "L^2*Ls - 2*h".
inline std::string render_text(const WeylElement& a) {
  std::vector<std::pair<HbarPoly, std::string>> terms;
  for (const auto& [key, c] : a.terms())
    terms.emplace_back(c, detail::join_factors({detail::power("L", key.k), detail::power("Ls", key.l)}));
  return detail::render_sum(terms, &render_hbar);
}

/// U-left ordered text, e.g. "U + U*V^2 - 1/3*U^3 - i*h*V".
inline std::string render_uv_text(const WeylElement& a) {
  std::vector<std::pair<HbarPoly, std::string>> terms;
  for (const auto& [key, c] : to_uv(a))
    terms.emplace_back(c, detail::join_factors({detail::power("U", key.k), detail::power("V", key.l)}));
  return detail::render_sum(terms, &render_hbar);
}

namespace detail {

inline std::string latex_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

inline std::string latex_power(const std::string& sym, int e) {
  if (e == 0) return {};
  return e == 1 ? sym : sym + "^{" + std::to_string(e) + "}";
}

inline std::string latex_hbar(const HbarPoly& p) {
  std::string out;
  auto emit = [&](mpq_class q, bool imag, int d) {
    const bool neg = sgn(q) < 0;
    if (neg) q = -q;
    std::string body = (q == 1 && (imag || d > 0)) ? std::string{} : latex_rational(q);
    if (imag) body += "i";
    body += latex_power("\\hbar", d);
    if (out.empty()) out = neg ? "-" + body : body;
    else out += (neg ? " - " : " + ") + body;
  };
  for (int d = 0; d <= p.degree(); ++d) {
    const GaussRational& c = p.coeff(d);
    if (sgn(c.re()) != 0) emit(c.re(), false, d);
    if (sgn(c.im()) != 0) emit(c.im(), true, d);
  }
  return out.empty() ? "0" : out;
}

}  // namespace detail

/// LaTeX of the U-left ordered form, e.g. "U + UV^{2} - \frac{1}{3}U^{3} - i\hbar V".
inline std::string render_latex(const WeylElement& a) {
  std::string out;
  for (const auto& [key, c] : to_uv(a)) {
    const std::string mono = detail::latex_power("U", key.k) + detail::latex_power("V", key.l);
    bool negative = false;
    std::string body;
    if (auto sf = detail::simple_factor(c)) {
      negative = sf->negative;
      const GaussRational& z = c.coeff(c.degree());
      mpq_class mag = z.is_real() ? z.re() : z.im();
      if (sgn(mag) < 0) mag = -mag;
      const bool bare = mag == 1 && (!mono.empty() || !z.is_real() || c.degree() > 0);
      body = (bare ? std::string{} : detail::latex_rational(mag)) + (z.is_real() ? "" : "i") +
             detail::latex_power("\\hbar", c.degree());
      if (!body.empty() && !mono.empty()) body += " ";
      body += mono;
      if (body.empty()) body = "1";
    } else {
      body = "\\left(" + detail::latex_hbar(c) + "\\right)" + (mono.empty() ? "\\mathbb{1}" : mono);
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

/// Coefficient in Q(i)(hbar): "c" or "(num)/(den)".
inline std::string render_hbar_field(const HbarField& c) {
  if (c.is_polynomial()) return render_hbar(c.num());
  return "(" + render_hbar(c.num()) + ")/(" + render_hbar(c.den()) + ")";
}

inline std::string render_poly_lambda(const PolyLambda& p) {
  std::string out;
  for (int k = 0; k <= p.degree(); ++k) {
    const HbarField& c = p.coeff(k);
    if (c.is_zero()) continue;
    std::string mono = detail::power("L", k);
    std::string body;
    bool negative = false;
    if (c.is_polynomial()) {
      if (auto sf = detail::simple_factor(c.num())) {
        negative = sf->negative;
        body = detail::join_factors({sf->factor, mono});
        if (body.empty()) body = "1";
      } else {
        body = mono.empty() ? "(" + render_hbar(c.num()) + ")" : "(" + render_hbar(c.num()) + ")*" + mono;
      }
    } else {
      body = "(" + render_hbar_field(c) + ")" + (mono.empty() ? "" : "*" + mono);
    }
    if (out.empty()) out = negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

inline std::string render_rat(const RatLambda& a) {
  if (a.is_polynomial()) return render_poly_lambda(a.num());
  return "(" + render_poly_lambda(a.num()) + ")/(" + render_poly_lambda(a.den()) + ")";
}

}  // namespace weylmin
