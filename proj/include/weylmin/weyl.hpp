#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylmin/gauss_rational.hpp"
#include "weylmin/hbar.hpp"

namespace weylmin {

/// Exponent pair of the basis monomial Lambda^k (Lambda*)^l. Ordered by total
/// degree, then by k; this is the serialization order.
struct Bidegree {
  int k = 0;
  int l = 0;

  int total() const noexcept { return k + l; }

  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend std::strong_ordering operator<=>(const Bidegree& a, const Bidegree& b) {
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.k <=> b.k;
  }
};

enum class Direction { u, v, d, dbar };

inline std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::u: return "u";
    case Direction::v: return "v";
    case Direction::d: return "d";
    case Direction::dbar: return "dbar";
  }
  return "?";
}

namespace detail {

inline HbarPoly shift_hbar(const HbarPoly& p, int j) {
  if (j == 0 || p.is_zero()) return p;
  std::vector<GaussRational> c(static_cast<std::size_t>(j), GaussRational{});
  c.insert(c.end(), p.coeffs().begin(), p.coeffs().end());
  return HbarPoly(std::move(c));
}

}  // namespace detail

/// Element of the Weyl algebra A_hbar in normal form
///   sum_{k,l} a_{kl}(hbar) Lambda^k (Lambda*)^l,   Lambda = U + iV,
/// with [Lambda, Lambda*] = 2 hbar. No zero coefficient is ever stored, so the
/// term map is canonical and equality is map equality.
class WeylElement {
 public:
  using TermMap = std::map<Bidegree, HbarPoly>;

  WeylElement() = default;
  WeylElement(HbarPoly c) { add_term({0, 0}, std::move(c)); }  // NOLINT(google-explicit-constructor)
  WeylElement(GaussRational c) : WeylElement(HbarPoly(std::move(c))) {}  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  WeylElement(T v) : WeylElement(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)

  static WeylElement term(HbarPoly c, int k, int l) {
    WeylElement r;
    r.add_term({k, l}, std::move(c));
    return r;
  }
  static WeylElement one() { return term(HbarPoly(1), 0, 0); }
  static WeylElement hbar_times(GaussRational c) { return term(hbar_monomial(c, 1), 0, 0); }
  static WeylElement lambda() { return term(HbarPoly(1), 1, 0); }
  static WeylElement lambda_star() { return term(HbarPoly(1), 0, 1); }
  /// U = (Lambda + Lambda*)/2
  static WeylElement U() {
    const GaussRational half(mpq_class(1, 2));
    return term(half, 1, 0) + term(half, 0, 1);
  }
  /// V = (Lambda - Lambda*)/(2i)
  static WeylElement V() {
    const GaussRational mi2(mpq_class(0), mpq_class(-1, 2));
    return term(mi2, 1, 0) - term(mi2, 0, 1);
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Maximal total degree k+l; -1 for zero.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

  HbarPoly coeff(int k, int l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? HbarPoly{} : it->second;
  }

  /// Element with only (k, 0) terms, i.e. a member of C[Lambda].
  bool is_holomorphic_polynomial() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.l == 0; });
  }

  WeylElement operator-() const {
    WeylElement r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
  }

  WeylElement& operator+=(const WeylElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }

  /// Normal-ordered product. Uses
  ///   (L*)^b L^c = sum_j j! C(b,j) C(c,j) (-2 hbar)^j L^{c-j} (L*)^{b-j}.
  friend WeylElement operator*(const WeylElement& x, const WeylElement& y) {
    WeylElement r;
    for (const auto& [kx, cx] : x.terms_) {
      for (const auto& [ky, cy] : y.terms_) {
        const HbarPoly base = cx * cy;
        const int b = kx.l, c = ky.k;
        mpz_class w = 1;
        for (int j = 0; j <= std::min(b, c); ++j) {
          if (j > 0) {
            w *= (b - j + 1) * (c - j + 1);
            w /= j;
            w *= -2;
          }
          const GaussRational wq{mpq_class(w)};
          r.add_term({kx.k + c - j, b - j + ky.l}, detail::shift_hbar(base.scaled(wq), j));
        }
      }
    }
    return r;
  }
  WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }

  WeylElement scaled(const HbarPoly& s) const {
    WeylElement r;
    if (s.is_zero()) return r;
    for (const auto& [key, c] : terms_) r.add_term(key, c * s);
    return r;
  }
  friend WeylElement operator*(const GaussRational& s, const WeylElement& a) { return a.scaled(HbarPoly(s)); }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// Accumulates c into the (key) coefficient, pruning zeros.
  void add_term(Bidegree key, const HbarPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  TermMap terms_;
};

inline WeylElement pow(const WeylElement& a, int n) {
  if (n < 0) throw std::domain_error("negative exponent");
  WeylElement r = WeylElement::one();
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

/// The star involution: U* = U, V* = V, antilinear and order-reversing.
/// On the basis, (c L^k (L*)^l)* = conj(c) L^l (L*)^k.
inline WeylElement star(const WeylElement& a) {
  WeylElement r;
  for (const auto& [key, c] : a.terms()) r.add_term({key.l, key.k}, conj(c));
  return r;
}

inline WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

/// Derivations acting diagonally on the normal-ordered basis:
///   d:    L^k (L*)^l -> k L^{k-1} (L*)^l
///   dbar: L^k (L*)^l -> l L^k (L*)^{l-1}
///   u = d + dbar,  v = i (d - dbar).
inline WeylElement derive(const WeylElement& a, Direction dir) {
  WeylElement hol, anti;
  for (const auto& [key, c] : a.terms()) {
    if (key.k > 0 && dir != Direction::dbar) hol.add_term({key.k - 1, key.l}, c.scaled(GaussRational(key.k)));
    if (key.l > 0 && dir != Direction::d) anti.add_term({key.k, key.l - 1}, c.scaled(GaussRational(key.l)));
  }
  switch (dir) {
    case Direction::d: return hol;
    case Direction::dbar: return anti;
    case Direction::u: return hol + anti;
    case Direction::v: return GaussRational::i() * (hol - anti);
  }
  return {};
}

/// The same derivations computed from their commutator definitions,
///   d_u A = [A,V]/(i hbar),  d_v A = -[A,U]/(i hbar),
///   d A = [A,L*]/(2 hbar),   dbar A = -[A,L]/(2 hbar).
/// Division by hbar is exact for every valid element; a remainder means the
/// element is corrupted and raises std::logic_error.
inline WeylElement derive_via_commutator(const WeylElement& a, Direction dir) {
  WeylElement c;
  GaussRational factor;
  switch (dir) {
    case Direction::u:
      c = commutator(a, WeylElement::V());
      factor = GaussRational(mpq_class(0), mpq_class(-1));
      break;
    case Direction::v:
      c = commutator(a, WeylElement::U());
      factor = GaussRational::i();
      break;
    case Direction::d:
      c = commutator(a, WeylElement::lambda_star());
      factor = GaussRational(mpq_class(1, 2));
      break;
    case Direction::dbar:
      c = commutator(a, WeylElement::lambda());
      factor = GaussRational(mpq_class(-1, 2));
      break;
  }
  WeylElement r;
  for (const auto& [key, coeff] : c.terms()) r.add_term(key, divide_by_hbar(coeff).scaled(factor));
  return r;
}

/// Delta_0 = d_u^2 + d_v^2 = 4 d dbar.
inline WeylElement laplace0(const WeylElement& a) {
  return GaussRational(4) * derive(derive(a, Direction::dbar), Direction::d);
}

inline WeylElement re(const WeylElement& a) { return GaussRational(mpq_class(1, 2)) * (a + star(a)); }
inline WeylElement im(const WeylElement& a) {
  return GaussRational(mpq_class(0), mpq_class(-1, 2)) * (a - star(a));
}

inline bool is_hermitian(const WeylElement& a) { return star(a) == a; }

/// Ordered product of a word over {U, V}, times a scalar prefix.
inline WeylElement from_uv(const HbarPoly& prefix, std::string_view word) {
  const WeylElement u = WeylElement::U(), v = WeylElement::V();
  WeylElement r(prefix);
  for (char ch : word) {
    if (ch == 'U') r *= u;
    else if (ch == 'V') r *= v;
    else throw std::invalid_argument(std::string("from_uv: letter '") + ch + "' is not U or V");
  }
  return r;
}

/// U^a V^b.
inline WeylElement uv_monomial(int a, int b) {
  return pow(WeylElement::U(), a) * pow(WeylElement::V(), b);
}

namespace detail {

inline void sym_walk(const WeylElement& prefix, int u_left, int v_left, const WeylElement& u,
                     const WeylElement& v, WeylElement& acc) {
  if (u_left == 0 && v_left == 0) {
    acc += prefix;
    return;
  }
  if (u_left > 0) sym_walk(prefix * u, u_left - 1, v_left, u, v, acc);
  if (v_left > 0) sym_walk(prefix * v, u_left, v_left - 1, u, v, acc);
}

}  // namespace detail

/// Sym(U^k V^l): the unnormalized sum over all C(k+l, k) distinct orderings
/// of k U's and l V's.
inline WeylElement sym(int k, int l) {
  if (k < 0 || l < 0) throw std::domain_error("sym: negative exponent");
  WeylElement acc;
  detail::sym_walk(WeylElement::one(), k, l, WeylElement::U(), WeylElement::V(), acc);
  return acc;
}

/// Coefficients c_{ab} of the unique U-left ordering sum c_{ab} U^a V^b.
using UVForm = std::map<Bidegree, HbarPoly>;

/// Rewrites a normal-form element in the U^a V^b basis. The leading
/// homogeneous part in (L, L*) determines the leading U,V coefficients by the
/// commutative binomial expansion; subtracting and recursing terminates since
/// reordering corrections drop the degree by two.
inline UVForm to_uv(const WeylElement& a) {
  UVForm out;
  WeylElement rest = a;
  while (!rest.is_zero()) {
    const int n = rest.degree();
    UVForm top;
    for (auto it = rest.terms().rbegin(); it != rest.terms().rend() && it->first.total() == n; ++it) {
      const int k = it->first.k, l = it->first.l;
      // (u+iv)^k (u-iv)^l
      mpz_class bk = 1;
      for (int p = 0; p <= k; ++p) {
        if (p > 0) bk = bk * (k - p + 1) / p;
        mpz_class bl = 1;
        for (int q = 0; q <= l; ++q) {
          if (q > 0) bl = bl * (l - q + 1) / q;
          // i^p (-i)^q = i^(p + 3q)
          const int phase = (p + 3 * q) % 4;
          mpq_class w(bk * bl);
          GaussRational unit = phase == 0 ? GaussRational(1)
                               : phase == 1 ? GaussRational::i()
                               : phase == 2 ? GaussRational(-1)
                                            : GaussRational(mpq_class(0), mpq_class(-1));
          HbarPoly c = it->second.scaled(unit * GaussRational(w));
          Bidegree key{n - p - q, p + q};
          auto [slot, inserted] = top.try_emplace(key, c);
          if (!inserted) slot->second += c;
        }
      }
    }
    for (const auto& [key, c] : top) {
      if (c.is_zero()) continue;
      rest -= uv_monomial(key.k, key.l).scaled(c);
      auto [slot, inserted] = out.try_emplace(key, c);
      if (!inserted) slot->second += c;
    }
    if (rest.degree() >= n) throw std::logic_error("to_uv: leading part did not cancel");
  }
  std::erase_if(out, [](const auto& t) { return t.second.is_zero(); });
  return out;
}

/// Inverse of to_uv.
inline WeylElement from_uv_form(const UVForm& form) {
  WeylElement r;
  for (const auto& [key, c] : form) r += uv_monomial(key.k, key.l).scaled(c);
  return r;
}

}  // namespace weylmin
