#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace weylmin;
using weylmin::testing::random_gauss;

namespace {

const RatLambda L = lambda_var();

RatLambda c(long v) { return RatLambda(v); }
RatLambda cq(long n, long d) { return rat_constant(GaussRational(mpq_class(n, d))); }
RatLambda scalar(const GaussRational& z) { return rat_constant(z); }
RatLambda rpow(const RatLambda& x, int n) {
  RatLambda r(1);
  for (int k = 0; k < n; ++k) r *= x;
  return r;
}

}  // namespace

TEST(RatLambda, CanonicalForm) {
  const RatLambda a = (L * L - c(1)) / (c(2) * L - c(2));
  EXPECT_EQ(a, cq(1, 2) * (L + c(1)));
  EXPECT_TRUE(a.is_polynomial());
  const RatLambda b = c(2) * L / (L * L + c(1));
  EXPECT_TRUE(b.den().leading() == HbarField(1));
  EXPECT_FALSE(b.is_polynomial());
  EXPECT_THROW(c(1) / RatLambda(), std::domain_error);
}

TEST(RatLambda, HbarScalarsFormAField) {
  const RatLambda h{HbarField(hbar())};
  const RatLambda a = (L + h) / (h * L);
  EXPECT_EQ(a * (h * L), L + h);
  EXPECT_THROW(as_hbar_poly(HbarField(1) / HbarField(hbar())), ScopeError);
}

TEST(RatLambda, DerivativeIsQuotientRule) {
  const RatLambda a = c(1) / (L * L + c(1));
  EXPECT_EQ(rf_derive(a), -c(2) * L / rpow(L * L + c(1), 2));
  EXPECT_EQ(rf_derive(rpow(L, 5)), c(5) * rpow(L, 4));
}

TEST(SquareFree, YunFactorization) {
  using P = PolyLambda;
  const P x = P::x();
  const P p = (x - P(1)) * (x - P(1)) * (x - P(1)) * (x + P(2)) * (x + P(2)) * (x * x + P(3));
  const auto f = squarefree_factors(p);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], x * x + P(3));
  EXPECT_EQ(f[1], x + P(2));
  EXPECT_EQ(f[2], x - P(1));
}

TEST(Integrability, HandComputedCases) {
  EXPECT_FALSE(rf_is_integrable(c(1) / L));
  EXPECT_TRUE(rf_is_integrable(c(1) / (L * L)));
  EXPECT_FALSE(rf_is_integrable(c(2) * L / (L * L + c(1))));
  // 2L/(L^2-2)^2 = -d/dL 1/(L^2-2); 1/(L^2-2) has residues +-1/(2 sqrt 2)
  EXPECT_TRUE(rf_is_integrable(c(2) * L / rpow(L * L - c(2), 2)));
  EXPECT_EQ(rf_primitive(c(2) * L / rpow(L * L - c(2), 2)), -c(1) / (L * L - c(2)) - cq(1, 2));
  EXPECT_FALSE(rf_is_integrable(c(1) / (L * L - c(2))));
  EXPECT_FALSE(rf_is_integrable(c(1) / rpow(L * L - c(2), 2)));
  EXPECT_THROW(rf_primitive(c(1) / L), NotIntegrableError);
  EXPECT_FALSE(rf_obstruction(c(1) / L).is_zero());
  EXPECT_TRUE(rf_obstruction(c(1) / (L * L)).is_zero());
}

TEST(Integrability, PolynomialPrimitiveVanishesAtOrigin) {
  const RatLambda p = rf_primitive(c(3) * L * L + c(5));
  EXPECT_EQ(p, rpow(L, 3) + c(5) * L);
  // pole at the origin: no constant is added
  EXPECT_EQ(rf_primitive(c(1) / (L * L)), -c(1) / L);
}

// Partial fractions built from known poles: A = q + sum_j sum_m c_jm / (L - r_j)^m.
// A has a rational primitive iff every c_j1 (the residue at r_j) is zero.
TEST(Integrability, ResidueOracle) {
  std::mt19937 rng(101);
  std::uniform_int_distribution<int> npoles(1, 3), mult(1, 3), coin(0, 1), qdeg(0, 3);
  int integrable_seen = 0, obstructed_seen = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<GaussRational> roots;
    const int np = npoles(rng);
    while (static_cast<int>(roots.size()) < np) {
      const GaussRational r = random_gauss(rng, 3);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    bool expect_integrable = true;
    RatLambda a(weylmin::testing::random_poly_lambda(rng, qdeg(rng)));
    for (const auto& r : roots) {
      const int e = mult(rng);
      for (int m = 1; m <= e; ++m) {
        GaussRational cm = random_gauss(rng, 4, false);
        if (m == 1 && e > 1 && coin(rng)) cm = GaussRational(0);
        if (m == 1 && !cm.is_zero()) expect_integrable = false;
        RatLambda coeff = scalar(cm);
        if (coin(rng) && coin(rng)) coeff *= RatLambda(HbarField(hbar()));
        a += coeff / rpow(L - scalar(r), m);
      }
    }
    ASSERT_EQ(rf_is_integrable(a), expect_integrable) << render_rat(a);
    if (expect_integrable) {
      ++integrable_seen;
      EXPECT_EQ(rf_derive(rf_primitive(a)), a);
    } else {
      ++obstructed_seen;
      EXPECT_THROW(rf_primitive(a), NotIntegrableError);
      EXPECT_TRUE(rf_is_integrable(a - rf_obstruction(a)));
    }
  }
  EXPECT_GT(integrable_seen, 10);
  EXPECT_GT(obstructed_seen, 10);
}

TEST(Weierstrass, PhiFromFgIsIsotropic) {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 30; ++trial) {
    const RatLambda f(weylmin::testing::random_poly_lambda(rng, 3));
    const RatLambda g = RatLambda(weylmin::testing::random_poly_lambda(rng, 3)) / (L - c(3));
    if (f.is_zero()) continue;
    const PhiVector phi = phi_from_fg(f, g);
    EXPECT_TRUE(isotropy_check(phi));
    const auto [f2, g2] = fg_from_phi(phi);
    EXPECT_EQ(f2, f);
    EXPECT_EQ(g2, g);
  }
}

TEST(Weierstrass, FgFromPhiRejectsBadInput) {
  EXPECT_THROW(fg_from_phi({L, L}), std::invalid_argument);
  EXPECT_THROW(fg_from_phi({L, L, L}), std::invalid_argument);
  const RatLambda i = scalar(GaussRational::i());
  // Phi^1 = i Phi^2 with Phi^3 = 0 is isotropic but has f = 0
  EXPECT_THROW(fg_from_phi({i * L, L, RatLambda()}), std::domain_error);
}

TEST(Weierstrass, EnneperData) {
  const PhiVector phi = phi_from_fg(c(2), L);
  EXPECT_EQ(phi[0], c(1) - L * L);
  EXPECT_EQ(phi[1], scalar(GaussRational::i()) * (c(1) + L * L));
  EXPECT_EQ(phi[2], c(2) * L);
}

TEST(Embedding, PolynomialsOnly) {
  EXPECT_EQ(rat_to_weyl(L * L + c(1)), pow(WeylElement::lambda(), 2) + WeylElement(1));
  EXPECT_THROW(rat_to_weyl(c(1) / L), ScopeError);
  EXPECT_EQ(weyl_to_poly(rat_to_weyl(c(3) * L)), PolyLambda::monomial(HbarField(3), 1));
  EXPECT_THROW(weyl_to_poly(WeylElement::lambda_star()), std::invalid_argument);
}
