#include <cmath>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "viewcurve/surface.hpp"

namespace viewcurve {
namespace {

using testing::Rng;

TEST(SurfaceJet, BuiltinsAtOrigin) {
  EXPECT_EQ(surface_jet(Surface::builtin(Builtin::ellip), 0, 0), (Jet2{0, 0, 0, -2, 0, -2}));
  EXPECT_EQ(surface_jet(Surface::builtin(Builtin::parab), 0, 0), (Jet2{0, 0, 0, 0, 0, 2}));
  EXPECT_EQ(surface_jet(Surface::builtin(Builtin::flat), 3, 7), (Jet2{}));
  EXPECT_EQ(surface_jet(Surface::builtin(Builtin::hyp), 0, 0), (Jet2{0, 0, 0, 2, 0, -2}));
}

TEST(SurfaceJet, FromSpecPicksBuiltinOrExpression) {
  EXPECT_TRUE(Surface::from_spec("ellip").is_builtin());
  const Surface s = Surface::from_spec("x*y + 1");
  EXPECT_FALSE(s.is_builtin());
  EXPECT_EQ(s.name(), "x*y + 1");
  EXPECT_EQ(s.jet(2, 3), (Jet2{7, 3, 2, 0, 1, 0}));
  EXPECT_THROW(Surface::from_spec("ellipse"), ParseError);
}

TEST(SurfaceJet, DomainErrorPropagates) {
  const Surface s = Surface::from_expression("1/(x - y)");
  EXPECT_THROW(s.jet(0.5, 0.5), DomainError);
  EXPECT_THROW(s.value(0.5, 0.5), DomainError);
}

TEST(SurfaceJet, HardCodedJetsMatchParserPath) {
  Rng rng(99);
  for (Builtin b : kAllBuiltins) {
    const Surface hard = Surface::builtin(b);
    const Surface parsed = Surface::from_expression(builtin_formula(b));
    for (int k = 0; k < 1000; ++k) {
      const double x = rng.uniform(-2, 2), y = rng.uniform(-2, 2);
      const Jet2 a = hard.jet(x, y), p = parsed.jet(x, y);
      ASSERT_NEAR(a.g, p.g, 1e-12) << to_string(b);
      ASSERT_NEAR(a.gx, p.gx, 1e-12) << to_string(b);
      ASSERT_NEAR(a.gy, p.gy, 1e-12) << to_string(b);
      ASSERT_NEAR(a.gxx, p.gxx, 1e-12) << to_string(b);
      ASSERT_NEAR(a.gxy, p.gxy, 1e-12) << to_string(b);
      ASSERT_NEAR(a.gyy, p.gyy, 1e-12) << to_string(b);
    }
  }
}

TEST(GaussianCurvature, CriticalPointExamples) {
  EXPECT_DOUBLE_EQ(gaussian_curvature(builtin_jet(Builtin::ellip, 0, 0)), 4.0);
  EXPECT_DOUBLE_EQ(gaussian_curvature(builtin_jet(Builtin::hyp, 0, 0)), -4.0);
  EXPECT_EQ(gaussian_curvature(builtin_jet(Builtin::parab, 0, 0)), 0.0);
}

TEST(GaussianCurvature, SignOfEachBuiltinEverywhere) {
  Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const double x = rng.uniform(-3, 3), y = rng.uniform(-3, 3);
    EXPECT_GT(gaussian_curvature(builtin_jet(Builtin::ellip, x, y)), 0.0);
    EXPECT_LT(gaussian_curvature(builtin_jet(Builtin::hyp, x, y)), 0.0);
    EXPECT_EQ(gaussian_curvature(builtin_jet(Builtin::flat, x, y)), 0.0);
    // y^2 - x^3: K = -12x / (...)^2
    const double kp = gaussian_curvature(builtin_jet(Builtin::parab, x, y));
    EXPECT_TRUE(x > 0 ? kp < 0 : kp > 0);
  }
}

TEST(GaussianCurvature, IdentityResidual) {
  EXPECT_LT(gauss_g_identity_residual(builtin_jet(Builtin::sin_xy, 0.3, 0.7)), 1e-12);
  EXPECT_LT(gauss_g_identity_residual(builtin_jet(Builtin::hyp, 1, 1)), 1e-12);
  Rng rng(17);
  for (int k = 0; k < 1000; ++k) {
    const Jet2 j{0, rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
                 rng.uniform(-1, 1), rng.uniform(-1, 1)};
    EXPECT_LT(gauss_g_identity_residual(j), 1e-12);
  }
}

TEST(LemmaGaussSign, Examples) {
  const auto e = lemma_gauss_sign(builtin_jet(Builtin::ellip, 0, 0));
  EXPECT_TRUE(e.k_nonnegative);
  EXPECT_DOUBLE_EQ(e.gxx_gyy, 4.0);
  EXPECT_TRUE(e.holds());

  const auto h = lemma_gauss_sign(builtin_jet(Builtin::hyp, 0, 0));
  EXPECT_TRUE(h.product_nonpositive);
  EXPECT_DOUBLE_EQ(h.K, -4.0);
  EXPECT_TRUE(h.holds());

  const auto f = lemma_gauss_sign(builtin_jet(Builtin::flat, 0.4, -2));
  EXPECT_TRUE(f.k_nonnegative);
  EXPECT_TRUE(f.product_nonpositive);
  EXPECT_TRUE(f.holds());
}

TEST(LemmaGaussSign, ZeroCurvatureWithTwist) {
  // (x + y)^2 has K = 0 but g_xx g_yy = g_xy^2 = 4.
  const auto r = lemma_gauss_sign(Surface::from_expression("(x + y)^2").jet(0.2, 0.1));
  EXPECT_NEAR(r.K, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(r.gxx_gyy, 4.0);
  EXPECT_TRUE(r.holds());
}

TEST(LemmaGaussSign, HoldsOnAllBuiltins) {
  Rng rng(23);
  for (Builtin b : kAllBuiltins) {
    for (int k = 0; k < 2000; ++k) {
      const auto r = lemma_gauss_sign(builtin_jet(b, rng.uniform(-2, 2), rng.uniform(-2, 2)));
      ASSERT_TRUE(r.holds()) << to_string(b);
    }
  }
}

}  // namespace
}  // namespace viewcurve
