#pragma once

#include <algorithm>
#include <map>
#include <ostream>
#include <random>
#include <string>

#include "weylmin/weylmin.hpp"

namespace weylmin {

// Readable gtest failure messages.
inline void PrintTo(const WeylElement& a, std::ostream* os) { *os << render_text(a); }
inline void PrintTo(const RatLambda& a, std::ostream* os) { *os << render_rat(a); }
inline void PrintTo(const GaussRational& z, std::ostream* os) { *os << z.to_string(); }

}  // namespace weylmin

namespace weylmin::testing {

inline GaussRational random_gauss(std::mt19937& rng, int span = 5, bool allow_zero = true) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  for (;;) {
    // sequenced draws keep the stream reproducible across compilers
    const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    GaussRational z(mpq_class(a, b), mpq_class(c, d));
    if (allow_zero || !z.is_zero()) return z;
  }
}

inline HbarPoly random_hbar_poly(std::mt19937& rng, int max_deg = 2) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  HbarPoly p;
  const int d = deg(rng);
  for (int j = 0; j <= d; ++j) p += hbar_monomial(random_gauss(rng), j);
  return p;
}

/// Random element of total degree <= max_deg with a handful of terms.
inline WeylElement random_weyl(std::mt19937& rng, int max_deg = 6, int max_terms = 6) {
  std::uniform_int_distribution<int> nterms(1, max_terms), total(0, max_deg);
  WeylElement a;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    const int tot = total(rng);
    const int k = std::uniform_int_distribution<int>(0, tot)(rng);
    HbarPoly c = random_hbar_poly(rng);
    a += WeylElement::term(std::move(c), k, tot - k);
  }
  return a;
}

inline PolyLambda random_poly_lambda(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  const int d = deg(rng);
  std::vector<HbarField> c;
  for (int k = 0; k <= d; ++k) c.emplace_back(random_gauss(rng, 6));
  return PolyLambda(std::move(c));
}

/// Oracle for normal ordering: words over {a = Lambda, b = Lambda*}, rewritten
/// one swap at a time with  b a -> a b - 2h  until no "ba" remains.
inline WeylElement rewrite_word(const std::string& word) {
  std::map<std::string, HbarPoly> pending{{word, HbarPoly(1)}};
  WeylElement out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string w = node.key();
    const HbarPoly c = node.mapped();
    const auto at = w.find("ba");
    if (at == std::string::npos) {
      const int k = static_cast<int>(std::count(w.begin(), w.end(), 'a'));
      out += WeylElement::term(c, k, static_cast<int>(w.size()) - k);
      continue;
    }
    std::string swapped = w, dropped = w;
    swapped[at] = 'a';
    swapped[at + 1] = 'b';
    dropped.erase(at, 2);
    pending[swapped] += c;
    pending[dropped] += c * hbar_monomial(GaussRational(-2), 1);
  }
  return out;
}

inline std::string repeat(char ch, int n) { return std::string(static_cast<std::size_t>(n), ch); }

}  // namespace weylmin::testing
