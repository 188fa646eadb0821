#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "support.hpp"

namespace weylmin {
inline WeylVector operator-(const WeylVector& x) {
  WeylVector r;
  for (const auto& c : x) r.push_back(-c);
  return r;
}
}  // namespace weylmin

using namespace weylmin;

namespace {

const RatLambda L = lambda_var();

WeylVector parse_all(const std::vector<std::string>& src) {
  WeylVector out;
  for (const auto& s : src) out.push_back(parse_weyl(s));
  return out;
}

WeylElement q(long n, long d = 1) { return WeylElement(GaussRational(mpq_class(n, d))); }
WeylElement sgn_sym(int k, int a, int b) { return GaussRational(k % 2 ? -1 : 1) * sym(a, b); }

WeylVector scaled(const WeylVector& x, const mpq_class& s) {
  WeylVector r;
  for (const auto& c : x) r.push_back(GaussRational(s) * c);
  return r;
}

// Printed forms of the examples, U-left ordered.
const std::vector<std::string> kEnneper = {"U + U*V^2 - 1/3*U^3 - i*h*V", "-V - U^2*V + 1/3*V^3 + i*h*U",
                                           "U^2 - V^2"};
// The ordered X1 is printed with -6 i h U; the symmetrized form expands to -6 i h U V.
const std::vector<std::string> kQuartic = {"-3/2*h^2 + U^2 - V^2 - 1/2*(U^4 + V^4) + 3*U^2*V^2 - 6*i*h*U*V",
                                           "i*h - 2*U*V - 2*U^3*V + 2*U*V^3 - 3*i*h*V^2 + 3*i*h*U^2",
                                           "4/3*U^3 - 4*U*V^2 + 4*i*h*V"};
const std::vector<std::string> kEnneper2 = {
    "U + 2*U^3*V^2 - U*V^4 - 1/5*U^5 - 6*i*h*U^2*V + 2*i*h*V^3 - 3*h^2*U",
    "-V + 2*U^2*V^3 - U^4*V - 1/5*V^5 - 6*i*h*U*V^2 + 2*i*h*U^3 - 3*h^2*V",
    "-2*U*V^2 + 2/3*U^3 + 2*i*h*V"};

}  // namespace

TEST(PrintedExamples, SymmetrizedAndOrderedFormsAgree) {
  const WeylElement U = WeylElement::U(), V = WeylElement::V();
  // Enneper, symmetrized
  EXPECT_EQ(U - q(1, 3) * pow(U, 3) + q(1, 3) * sym(1, 2), parse_weyl(kEnneper[0]));
  EXPECT_EQ(-V + q(1, 3) * pow(V, 3) - q(1, 3) * sym(2, 1), parse_weyl(kEnneper[1]));
  // quartic, symmetrized
  EXPECT_EQ(U * U - V * V - q(1, 2) * (pow(U, 4) + pow(V, 4)) + q(1, 2) * sym(2, 2), parse_weyl(kQuartic[0]));
  EXPECT_EQ(-U * V - V * U - q(1, 2) * sym(3, 1) + q(1, 2) * sym(1, 3), parse_weyl(kQuartic[1]));
  EXPECT_EQ(q(4, 3) * pow(U, 3) - q(4, 3) * sym(1, 2), parse_weyl(kQuartic[2]));
}

TEST(PrintedExamples, QuarticOrderedTypo) {
  // literal ordered X1 differs from the symmetrized one by exactly 6 i h (U V - U)
  const WeylElement literal = parse_weyl("-3/2*h^2 + U^2 - V^2 - 1/2*(U^4 + V^4) + 3*U^2*V^2 - 6*i*h*U");
  EXPECT_EQ(parse_weyl(kQuartic[0]) - literal, parse_weyl("-6*i*h*U*V + 6*i*h*U"));
}

TEST(Golden, EnneperFromFtildeCube) {
  // The printed Enneper surface is Re(Omega)/6: Ft = L^3/6, i.e. F = 1.
  const Surface s = surface_from_Ftilde(parse_poly_lambda("L^3/6"));
  EXPECT_EQ(s.components, parse_all(kEnneper));
  const Surface full = surface_from_Ftilde(parse_poly_lambda("L^3"));
  EXPECT_EQ(full.components, scaled(parse_all(kEnneper), 6));
  EXPECT_EQ(surface_from_F(RatLambda(6)).components, full.components);
  EXPECT_EQ(surface_from_F(RatLambda(1)).components, s.components);
  EXPECT_TRUE(verify_minimal(s).passes());
}

TEST(Golden, QuarticFromFtilde) {
  const Surface s = surface_from_Ftilde(parse_poly_lambda("L^4/12"));
  EXPECT_EQ(s.components, parse_all(kQuartic));
  EXPECT_EQ(surface_from_Ftilde(parse_poly_lambda("L^4")).components, scaled(parse_all(kQuartic), 12));
  EXPECT_EQ(surface_from_F(RatLambda(24) * L).components, scaled(parse_all(kQuartic), 12));
  EXPECT_TRUE(verify_minimal(s).passes());
}

TEST(Golden, HigherEnneperSquare) {
  const Surface s = enneper(2);
  EXPECT_EQ(s.components, parse_all(kEnneper2));
  EXPECT_TRUE(verify_minimal(s).passes());
}

TEST(Golden, PairInFourDimensions) {
  const Surface s = surface_from_pair(parse_poly_lambda("L"), parse_poly_lambda("L^2"));
  EXPECT_EQ(s.components, parse_all({"U", "V", "U^2 - V^2", "2*U*V - i*h"}));
  EXPECT_TRUE(verify_minimal(s).passes());
}

TEST(ExplicitFormulas, PowerFtildeMatchesSymmetrization) {
  for (int n = 3; n <= 8; ++n) {
    WeylElement x1, x2, x3;
    const WeylElement r = GaussRational(mpq_class(n - 2, n)) * WeylElement::one();
    for (int k = 0; 2 * (k + 1) <= n; ++k) x1 += sgn_sym(k, n - 2 * (k + 1), 2 * k);
    for (int k = 0; 2 * k <= n; ++k) x1 -= r * sgn_sym(k, n - 2 * k, 2 * k);
    for (int k = 1; 2 * k <= n - 1; ++k) x2 += sgn_sym(k, n - 1 - 2 * k, 2 * k - 1);
    for (int k = 1; 2 * k <= n + 1; ++k) x2 += r * sgn_sym(k, n - 2 * k + 1, 2 * k - 1);
    for (int k = 0; 2 * k <= n - 1; ++k) x3 += sgn_sym(k, n - 1 - 2 * k, 2 * k);
    x3 = GaussRational(mpq_class(2 * (n - 2), n - 1)) * x3;
    const Surface s = surface_from_Ftilde(PolyLambda::monomial(HbarField(1), n));
    const WeylVector expect{x1, x2, x3};
    EXPECT_EQ(s.components, scaled(expect, n * (n - 1))) << "n=" << n;
  }
}

TEST(ExplicitFormulas, HigherEnneperMatchesSymmetrization) {
  for (int n = 1; n <= 5; ++n) {
    const mpq_class w(1, 2 * n + 1);
    WeylElement x1 = WeylElement::U(), x2 = -WeylElement::V(), x3;
    for (int k = 0; k <= n; ++k) x1 -= GaussRational(w) * sgn_sym(k, 2 * n + 1 - 2 * k, 2 * k);
    for (int k = 1; k <= n + 1; ++k) x2 += GaussRational(w) * sgn_sym(k, 2 * n + 2 - 2 * k, 2 * k - 1);
    for (int k = 0; 2 * k <= n + 1; ++k) x3 += sgn_sym(k, n + 1 - 2 * k, 2 * k);
    x3 = GaussRational(mpq_class(2, n + 1)) * x3;
    EXPECT_EQ(enneper(n).components, (WeylVector{x1, x2, x3})) << "n=" << n;
  }
}

TEST(ExplicitFormulas, PairOfPowers) {
  for (int n = 1; n <= 5; ++n) {
    WeylElement re_n, im_n;
    for (int k = 0; 2 * k <= n; ++k) re_n += sgn_sym(k, n - 2 * k, 2 * k);
    for (int k = 1; 2 * k - 1 <= n; ++k) im_n -= sgn_sym(k, n - 2 * k + 1, 2 * k - 1);
    const Surface s = surface_from_pair(PolyLambda::monomial(HbarField(1), n), PolyLambda::monomial(HbarField(1), 2));
    EXPECT_EQ(s.components[0], re_n);
    EXPECT_EQ(s.components[1], im_n);
    EXPECT_TRUE(verify_minimal(s).passes());
  }
}

TEST(Constructors, RandomFtildeSurfacesAreMinimal) {
  std::mt19937 rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    const PolyLambda ft = weylmin::testing::random_poly_lambda(rng, 6);
    const Surface s = surface_from_Ftilde(ft);
    const auto rep = verify_minimal(s);
    EXPECT_TRUE(rep.passes()) << render_poly_lambda(ft);
    const auto fff = first_fundamental(s);
    const WeylVector phi = phi_of(s.components);
    EXPECT_EQ(bilinear(phi, phi), fff.E - fff.G - GaussRational(mpq_class(0), mpq_class(2)) * fff.F);
    // Ft and Ft''' describe the same surface
    EXPECT_EQ(surface_from_F(RatLambda(ft.derivative().derivative().derivative())).components, s.components);
  }
}

TEST(Constructors, FgWithRationalDataIsMinimal) {
  // g has a pole but Phi = ((L^2-1)/2, i(L^2+1)/2, L) is polynomial
  const Surface s = surface_from_fg(L * L, RatLambda(1) / L);
  EXPECT_TRUE(verify_minimal(s).passes());
  EXPECT_EQ(phi_of(s.components)[2], rat_to_weyl(L));
}

TEST(Constructors, OffsetsShiftComponents) {
  const Surface s = surface_from_Ftilde(parse_poly_lambda("L^3/6"), {mpq_class(1), mpq_class(-1, 2), mpq_class(3)});
  EXPECT_EQ(s.components[1], parse_weyl(kEnneper[1]) - q(1, 2));
  EXPECT_TRUE(verify_minimal(s).passes());
  EXPECT_THROW(surface_from_Ftilde(parse_poly_lambda("L^3"), {mpq_class(1)}), std::invalid_argument);
}

TEST(Constructors, ErrorsOutsideScope) {
  // 1/(2L) has a logarithmic primitive
  EXPECT_THROW(surface_from_fg(RatLambda(1) / L, RatLambda()), NotIntegrableError);
  // primitive -1/L is rational but not a polynomial
  EXPECT_THROW(surface_from_fg(RatLambda(1) / (L * L), RatLambda()), ScopeError);
}

TEST(Verify, BrokenSurfaceHasWitnesses) {
  Surface s = enneper(1);
  s.components[2] += WeylElement::U() * WeylElement::V() + WeylElement::V() * WeylElement::U();
  auto rep = verify_minimal(s);
  EXPECT_FALSE(rep.passes());
  EXPECT_FALSE(rep.witnesses.empty());
  s = enneper(1);
  s.components[0] += WeylElement::hbar_times(GaussRational::i());
  rep = verify_minimal(s);
  EXPECT_FALSE(rep.hermitian[0]);
  EXPECT_FALSE(rep.passes());
}

TEST(Bilinear, DerivationProperty) {
  std::mt19937 rng(223);
  for (int trial = 0; trial < 20; ++trial) {
    WeylVector x, y;
    for (int i = 0; i < 3; ++i) {
      x.push_back(weylmin::testing::random_weyl(rng, 3, 3));
      y.push_back(weylmin::testing::random_weyl(rng, 3, 3));
    }
    for (auto dir : {Direction::u, Direction::v, Direction::d, Direction::dbar})
      EXPECT_EQ(derive(bilinear(x, y), dir), bilinear(derive(x, dir), y) + bilinear(x, derive(y, dir)));
  }
}

class NormalAndCurvature : public ::testing::TestWithParam<std::string> {};

TEST_P(NormalAndCurvature, HoldForFSurfaces) {
  const Surface s = surface_from_F(parse_rat(GetParam()));
  const WeylVector n = normal_element();
  EXPECT_TRUE(check_normal(s, n));
  EXPECT_TRUE(mean_curvature_H0(s, n).is_zero());
  EXPECT_TRUE(verify_minimal(s).passes());
}

TEST_P(NormalAndCurvature, ConjugateSurface) {
  const Surface s = surface_from_F(parse_rat(GetParam()));
  const Surface t = conjugate_surface(s);
  EXPECT_TRUE(verify_minimal(t).passes());
  EXPECT_EQ(derive(s.components, Direction::u), derive(t.components, Direction::v));
  EXPECT_EQ(derive(s.components, Direction::v), -derive(t.components, Direction::u));
}

INSTANTIATE_TEST_SUITE_P(CriterionSurfaces, NormalAndCurvature, ::testing::Values("6", "24*L", "1 + L^3"));

TEST(Conjugate, NeedsPrimitives) {
  Surface s = enneper(1);
  s.provenance.primitives.clear();
  EXPECT_THROW(conjugate_surface(s), ScopeError);
}

TEST(Conjugate, TwiceIsNegation) {
  const Surface s = enneper(2);
  const Surface tt = conjugate_surface(conjugate_surface(s));
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(tt.components[i], -s.components[i]);
}

TEST(Classical, EnneperLimit) {
  const Surface s = surface_from_Ftilde(parse_poly_lambda("L^3/6"));
  const CommPoly u = CommPoly::u(), v = CommPoly::v();
  const CommPoly third(GaussRational(mpq_class(1, 3)));
  const CommPoly x1 = u + u * v * v - third * pow(u, 3);
  const CommPoly x2 = -v - u * u * v + third * pow(v, 3);
  const CommPoly x3 = u * u - v * v;
  EXPECT_EQ(classical_limit(s.components[0]), x1);
  EXPECT_EQ(classical_limit(s.components[1]), x2);
  EXPECT_EQ(classical_limit(s.components[2]), x3);
}
