#include <gtest/gtest.h>

#include <algorithm>

#include "lpdo/char_poly.hpp"
#include "support.hpp"

namespace lpdo {
namespace {

using testing::Gen;

const RatExpr X = RatExpr::x();
const RatExpr Y = RatExpr::y();
const LPDO Dx = LPDO::dx();
const LPDO Dy = LPDO::dy();

// Root invariants: exact vanishing, multiplicity by derivatives, total
// multiplicity against the residual factor.
void check_roots(const CharPoly& p, const RootSet& rs) {
  int total = 0;
  for (const auto& r : rs.roots) {
    ASSERT_GE(r.multiplicity, 1);
    total += r.multiplicity;
    if (r.at_infinity) {
      ASSERT_EQ(r.multiplicity, p.n - p.degree());
      continue;
    }
    CharPoly d = p;
    for (int i = 0; i < r.multiplicity; ++i) {
      ASSERT_TRUE(d(r.value).is_zero()) << r.to_string() << " derivative " << i;
      d = d.derivative();
    }
    ASSERT_FALSE(d(r.value).is_zero()) << r.to_string();
  }
  ASSERT_LE(total, p.n);
  ASSERT_EQ(total == p.n, rs.unresolved.empty());
}

TEST(CharPoly, ReadOff) {
  const CharPoly p = char_poly(LPDO::derivative(2, 0) - LPDO::derivative(0, 2) + X * Dy + LPDO(1));
  ASSERT_EQ(p.n, 2);
  EXPECT_EQ(p.coeffs, (std::vector<RatExpr>{1, 0, -1}));
  EXPECT_EQ(p.to_string(), "w^2 - 1");
  EXPECT_THROW(char_poly(LPDO(X)), std::invalid_argument);
}

TEST(FindRoots, Hyperbolic) {
  const CharPoly p = char_poly(LPDO::derivative(2, 0) - LPDO::derivative(0, 2));
  const RootSet rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.roots[0].value, RatExpr(-1));
  EXPECT_EQ(rs.roots[1].value, RatExpr(1));
  check_roots(p, rs);
}

TEST(FindRoots, EllipticAdjoinsI) {
  const CharPoly p = char_poly(LPDO::derivative(2, 0) + LPDO::derivative(0, 2));
  const RootSet rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 2u);
  for (const auto& r : rs.roots) {
    EXPECT_EQ(r.extension_used, std::vector<ConstScalar::Radicand>{-1});
    EXPECT_EQ(r.value * r.value, RatExpr(-1));
  }
  check_roots(p, rs);
}

TEST(FindRoots, PoissonHasRootAtInfinity) {
  const CharPoly p = char_poly(LPDO::derivative(1, 1) + Dx);
  const RootSet rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 2u);
  EXPECT_EQ(rs.roots[0].value, RatExpr());
  EXPECT_TRUE(rs.roots[1].at_infinity);
  EXPECT_EQ(rs.roots[1].multiplicity, 1);
  check_roots(p, rs);
}

TEST(FindRoots, ParabolicDoubleRoot) {
  // a20 w^2 + a11 w + a02 with a11^2 = 4 a20 a02.
  const RatExpr a20 = X;
  const RatExpr a11 = RatExpr(2) * X * Y;
  const RatExpr a02 = X * Y * Y;
  LPDO a = a20 * LPDO::derivative(2, 0) + a11 * LPDO::derivative(1, 1) + a02 * LPDO::derivative(0, 2);
  const CharPoly p = char_poly(a);
  const RootSet rs = find_roots(p);
  ASSERT_EQ(rs.roots.size(), 1u);
  EXPECT_EQ(rs.roots[0].value, -a11 / (RatExpr(2) * a20));
  EXPECT_EQ(rs.roots[0].multiplicity, 2);
  check_roots(p, rs);
}

TEST(FindRoots, FunctionRoots) {
  // (w - x)(w + y/x) times a constant.
  LPDO a = compose(Dx - X * Dy, Dx + (Y / X) * Dy);
  a = compose(a, Dx - RatExpr(3) * Dy);
  const CharPoly p = char_poly(a);
  const RootSet rs = find_roots(p);
  check_roots(p, rs);
  ASSERT_TRUE(rs.unresolved.empty());
  std::vector<RatExpr> values;
  for (const auto& r : rs.roots) values.push_back(r.value);
  EXPECT_NE(std::find(values.begin(), values.end(), X), values.end());
  EXPECT_NE(std::find(values.begin(), values.end(), -Y / X), values.end());
  EXPECT_NE(std::find(values.begin(), values.end(), RatExpr(3)), values.end());
}

TEST(FindRoots, UnresolvedFactorIsReported) {
  // w^3 - 2 has no root in any multiquadratic tower.
  LPDO a = LPDO::derivative(3, 0) + RatExpr(2) * LPDO::derivative(0, 3);
  const CharPoly p = char_poly(a);
  const RootSet rs = find_roots(p);
  EXPECT_TRUE(rs.roots.empty());
  EXPECT_FALSE(rs.unresolved.empty());
  check_roots(p, rs);
}

TEST(FindRoots, RandomProductsOfConstantFactors) {
  Gen g(31);
  for (int t = 0; t < 200; ++t) {
    const int n = g.integer(2, 4);
    LPDO a(1);
    std::vector<RatExpr> ws;
    for (int i = 0; i < n; ++i) {
      const RatExpr w(g.rational(3, 2));
      ws.push_back(w);
      a = compose(a, Dx - w * Dy + LPDO(g.rat(1)));
    }
    const CharPoly p = char_poly(a);
    const RootSet rs = find_roots(p);
    check_roots(p, rs);
    ASSERT_TRUE(rs.unresolved.empty());
    for (const auto& w : ws) ASSERT_EQ(root_multiplicity(p, w), std::count(ws.begin(), ws.end(), w));
  }
}

TEST(FindRoots, DeterministicOrder) {
  const CharPoly p = char_poly(compose({Dx - RatExpr(2) * Dy, Dx + Dy, Dx}));
  const RootSet a = find_roots(p);
  const RootSet b = find_roots(p);
  ASSERT_EQ(a.roots.size(), b.roots.size());
  for (std::size_t i = 0; i < a.roots.size(); ++i) EXPECT_EQ(a.roots[i].value, b.roots[i].value);
  for (std::size_t i = 1; i < a.roots.size(); ++i) {
    EXPECT_LT(a.roots[i - 1].to_string(), a.roots[i].to_string());
  }
}

}  // namespace
}  // namespace lpdo
