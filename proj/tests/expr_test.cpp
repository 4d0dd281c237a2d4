#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "viewcurve/expr.hpp"

namespace viewcurve {
namespace {

using testing::Rng;

TEST(Parse, FunctionCall) { EXPECT_EQ(parse("sin(x*y)").to_string(), "sin(mul(x,y))"); }

TEST(Parse, NegationBindsLooserThanPower) {
  EXPECT_EQ(parse("-x^2 - y^2").to_string(), "sub(neg(pow(x,2)),pow(y,2))");
}

TEST(Parse, PrecedenceAndAssociativity) {
  EXPECT_EQ(parse("x - y - 1").to_string(), "sub(sub(x,y),1)");
  EXPECT_EQ(parse("x / y / 2").to_string(), "div(div(x,y),2)");
  EXPECT_EQ(parse("x + y * x").to_string(), "add(x,mul(y,x))");
  EXPECT_EQ(parse("(x + y) * x").to_string(), "mul(add(x,y),x)");
  EXPECT_EQ(parse("-x*y").to_string(), "mul(neg(x),y)");
  EXPECT_EQ(parse("x^-1").to_string(), "pow(x,-1)");
}

TEST(Parse, WhitespaceInsensitive) {
  EXPECT_EQ(parse("  sqrt ( x ) *\texp(y)\n").to_string(), parse("sqrt(x)*exp(y)").to_string());
}

TEST(Parse, FoldsLiteralSubtrees) {
  EXPECT_EQ(parse("2*3 + x").to_string(), "add(6,x)");
  EXPECT_EQ(parse("-2").to_string(), "-2");
  EXPECT_EQ(parse("1.5e1").to_string(), "15");
}

TEST(Parse, UnbalancedParenthesisReportsOffset) {
  // Input ending inside a group is reported at the last token read.
  auto error_of = [](const char* text) -> ParseError {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e;
    }
    return ParseError(std::string::npos, "no error");
  };
  const ParseError e = error_of("x^(2");
  EXPECT_EQ(e.offset(), 3u);
  EXPECT_NE(e.detail().find("unbalanced parenthesis"), std::string::npos);
  EXPECT_NE(e.detail().find("offset 2"), std::string::npos);
  EXPECT_EQ(error_of("sin(x").offset(), 4u);
  EXPECT_EQ(error_of("(x + 10").offset(), 5u);
  EXPECT_EQ(error_of("((x)").offset(), 3u);
  const ParseError wrong = error_of("sin(x]");
  EXPECT_EQ(wrong.offset(), 5u);
  EXPECT_NE(wrong.detail().find("expected ')'"), std::string::npos);
}

TEST(Parse, ParenthesizedExponent) {
  EXPECT_EQ(parse("x^(2)").to_string(), "pow(x,2)");
  EXPECT_EQ(parse("y^( -1 )").to_string(), "pow(y,-1)");
  EXPECT_EQ(parse("x^((3))").to_string(), "pow(x,3)");
  EXPECT_THROW(parse("x^(x)"), ParseError);
}

TEST(Parse, Errors) {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return std::string::npos;
  };
  EXPECT_EQ(offset_of(""), 0u);
  EXPECT_EQ(offset_of("x +"), 3u);
  EXPECT_EQ(offset_of("x y"), 2u);
  EXPECT_EQ(offset_of("tan(x)"), 0u);
  EXPECT_EQ(offset_of("x + z"), 4u);
  EXPECT_EQ(offset_of("x^2.5"), 2u);
  EXPECT_EQ(offset_of("x^y"), 2u);
  EXPECT_EQ(offset_of("x^2^2"), 3u);
  EXPECT_EQ(offset_of("x # 2"), 2u);

  try {
    parse("foo + x");
  } catch (const ParseError& e) {
    EXPECT_NE(e.detail().find("unknown identifier 'foo'"), std::string::npos);
  }
  try {
    parse("x^2.5");
  } catch (const ParseError& e) {
    EXPECT_NE(e.detail().find("non-integer exponent"), std::string::npos);
  }
}

TEST(Differentiate, Polynomial) {
  const Expr d = differentiate(parse("x^2 - y^2"), Variable::x);
  for (double x : {-1.5, 0.0, 0.25, 3.0}) EXPECT_DOUBLE_EQ(d.evaluate(x, 7.0), 2.0 * x);
}

TEST(Differentiate, VanishesAtCriticalPoint) {
  EXPECT_EQ(differentiate(parse("y^2 - x^3"), Variable::y).evaluate(0.0, 0.0), 0.0);
  EXPECT_EQ(differentiate(parse("y^2 - x^3"), Variable::x).evaluate(0.0, 0.0), 0.0);
}

TEST(Differentiate, SinXyAgainstCentralDifference) {
  const Expr e = parse("sin(x*y)");
  const double pi = std::numbers::pi;
  const double h = 1e-5;
  const double fd = (e.evaluate(1.0 + h, pi) - e.evaluate(1.0 - h, pi)) / (2.0 * h);
  const double d = differentiate(e, Variable::x).evaluate(1.0, pi);
  EXPECT_NEAR(d, -pi, 1e-12);
  EXPECT_NEAR(d, fd, 1e-8);
}

TEST(Differentiate, EveryRule) {
  // Each operator once, checked against 5-point stencils.
  const char* texts[] = {"sin(x) * cos(y)", "exp(x*y) / (1 + x^2)", "sqrt(2 + x*y)",
                         "-(x - y)^3",      "(x + 2)^-2",           "cos(exp(y) - x)"};
  for (const char* text : texts) {
    const Expr e = parse(text);
    const auto f = [&](double x, double y) { return e.evaluate(x, y); };
    const Jet2 fd = testing::fd5_jet(f, 0.3, -0.4, 1e-3);
    EXPECT_NEAR(differentiate(e, Variable::x).evaluate(0.3, -0.4), fd.gx, 1e-9) << text;
    EXPECT_NEAR(differentiate(e, Variable::y).evaluate(0.3, -0.4), fd.gy, 1e-9) << text;
  }
}

TEST(EvalJet2, Quadratic) {
  EXPECT_EQ(eval_jet2(parse("x^2 - y^2"), 0.0, 0.0), (Jet2{0, 0, 0, 2, 0, -2}));
}

TEST(EvalJet2, SinXyAtOrigin) {
  const Expr e = parse("sin(x*y)");
  const Jet2 j = eval_jet2(e, 0.0, 0.0);
  EXPECT_EQ(j, (Jet2{0, 0, 0, 0, 1, 0}));
  const Jet2 fd = testing::fd5_jet([&](double x, double y) { return e.evaluate(x, y); }, 0.0, 0.0,
                                   1e-3);
  EXPECT_NEAR(fd.gxy, 1.0, 1e-6);
  EXPECT_NEAR(fd.gxx, 0.0, 1e-6);
  EXPECT_NEAR(fd.gyy, 0.0, 1e-6);
}

TEST(EvalJet2, DomainErrors) {
  EXPECT_THROW(eval_jet2(parse("1/x"), 0.0, 0.0), DomainError);
  EXPECT_THROW(eval_jet2(parse("sqrt(x)"), -1.0, 0.0), DomainError);
  EXPECT_THROW(eval_jet2(parse("sqrt(x)"), 0.0, 0.0), DomainError);  // derivative blows up
  EXPECT_THROW(eval_jet2(parse("x^-2"), 0.0, 1.0), DomainError);
  EXPECT_THROW(eval_jet2(parse("exp(exp(x))"), 10.0, 0.0), DomainError);
  try {
    parse("1/x").evaluate(0.0, 0.0);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("div(1,x)"), std::string::npos);
  }
}

TEST(EvalJet2, RandomPolynomialsAgainstFiniteDifferences) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto poly = testing::random_polynomial(rng);
    const Expr e = parse(poly.text());
    const JetTrees trees(e);
    const auto f = [&](double x, double y) { return e.evaluate(x, y); };
    for (int k = 0; k < 100; ++k) {
      const double x = rng.uniform(-1.0, 1.0);
      const double y = rng.uniform(-1.0, 1.0);
      const Jet2 j = trees.evaluate(x, y);
      const Jet2 fd = testing::fd5_jet(f, x, y, 1e-4);
      const Jet2 exact = poly.exact_jet(x, y);
      const double got[] = {j.g, j.gx, j.gy, j.gxx, j.gxy, j.gyy};
      const double est[] = {fd.g, fd.gx, fd.gy, fd.gxx, fd.gxy, fd.gyy};
      const double ref[] = {exact.g, exact.gx, exact.gy, exact.gxx, exact.gxy, exact.gyy};
      for (int c = 0; c < 6; ++c) {
        ASSERT_TRUE(testing::close(got[c], est[c], 1e-5, 1e-7))
            << poly.text() << " at (" << x << "," << y << ") component " << c;
        ASSERT_TRUE(testing::close(got[c], ref[c], 1e-12, 1e-12)) << poly.text() << " component " << c;
      }
    }
  }
}

TEST(EvalJet2, SecondDerivativeIsDifferentiateTwice) {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Expr e = parse(testing::random_polynomial(rng).text());
    const Expr dxx = differentiate(differentiate(e, Variable::x), Variable::x);
    const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
    EXPECT_EQ(dxx.evaluate(x, y), eval_jet2(e, x, y).gxx);
  }
}

TEST(EvalJet2, MixedPartialsCommute) {
  Rng rng(11);
  const char* texts[] = {"sin(x*y)", "exp(x - y^2) * cos(x)", "sqrt(3 + x*y^3)", "x^3*y / (2 + y^2)"};
  for (const char* text : texts) {
    const Expr e = parse(text);
    const Expr xy = differentiate(differentiate(e, Variable::x), Variable::y);
    const Expr yx = differentiate(differentiate(e, Variable::y), Variable::x);
    for (int k = 0; k < 100; ++k) {
      const double x = rng.uniform(-1, 1), y = rng.uniform(-1, 1);
      EXPECT_NEAR(xy.evaluate(x, y), yx.evaluate(x, y), 1e-12) << text;
    }
  }
}

}  // namespace
}  // namespace viewcurve
