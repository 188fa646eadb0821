#pragma once

#include <map>
#include <string>
#include <utility>

#include "weylmin/gauss_rational.hpp"
#include "weylmin/weyl.hpp"

namespace weylmin {

/// Commutative polynomial sum c_{ab} u^a v^b over Q(i).
class CommPoly {
 public:
  using Key = std::pair<int, int>;

  CommPoly() = default;
  CommPoly(GaussRational c) { add(0, 0, std::move(c)); }  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  CommPoly(T v) : CommPoly(GaussRational(v)) {}  // NOLINT(google-explicit-constructor)

  static CommPoly u() { return monomial(1, 1, 0); }
  static CommPoly v() { return monomial(1, 0, 1); }
  static CommPoly monomial(GaussRational c, int a, int b) {
    CommPoly p;
    p.add(a, b, std::move(c));
    return p;
  }

  const std::map<Key, GaussRational>& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }

  void add(int a, int b, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  CommPoly operator-() const {
    CommPoly r = *this;
    for (auto& [k, c] : r.t_) c = -c;
    return r;
  }
  friend CommPoly operator+(CommPoly a, const CommPoly& b) {
    for (const auto& [k, c] : b.t_) a.add(k.first, k.second, c);
    return a;
  }
  friend CommPoly operator-(const CommPoly& a, const CommPoly& b) { return a + (-b); }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b) {
    CommPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) r.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
  }
  friend bool operator==(const CommPoly&, const CommPoly&) = default;

  CommPoly du() const {
    CommPoly r;
    for (const auto& [k, c] : t_)
      if (k.first > 0) r.add(k.first - 1, k.second, c * GaussRational(k.first));
    return r;
  }
  CommPoly dv() const {
    CommPoly r;
    for (const auto& [k, c] : t_)
      if (k.second > 0) r.add(k.first, k.second - 1, c * GaussRational(k.second));
    return r;
  }

  std::string to_string() const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string() + ")";
      if (k.first) s += "*u^" + std::to_string(k.first);
      if (k.second) s += "*v^" + std::to_string(k.second);
    }
    return s;
  }

 private:
  std::map<Key, GaussRational> t_;
};

inline CommPoly pow(const CommPoly& p, int n) {
  CommPoly r(1);
  for (int i = 0; i < n; ++i) r = r * p;
  return r;
}

/// hbar -> 0 limit: keep the hbar-free coefficients and substitute
/// Lambda -> u + iv, Lambda* -> u - iv in the commutative ring.
inline CommPoly classical_limit(const WeylElement& a) {
  const CommPoly z = CommPoly::u() + CommPoly::monomial(GaussRational::i(), 0, 1);
  const CommPoly zbar = CommPoly::u() - CommPoly::monomial(GaussRational::i(), 0, 1);
  CommPoly r;
  for (const auto& [key, c] : a.terms()) {
    const GaussRational& c0 = c.coeff(0);
    if (c0.is_zero()) continue;
    r = r + CommPoly(c0) * pow(z, key.k) * pow(zbar, key.l);
  }
  return r;
}

}  // namespace weylmin
