#pragma once

// Graph surfaces s(x, y) = (x, y, g(x, y)) and their Gaussian curvature.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "viewcurve/errors.hpp"
#include "viewcurve/expr.hpp"
#include "viewcurve/jet.hpp"

namespace viewcurve {

enum class Builtin { sin_xy, ellip, hyp, parab, flat };

inline constexpr std::array<Builtin, 5> kAllBuiltins = {Builtin::sin_xy, Builtin::ellip,
                                                        Builtin::hyp, Builtin::parab, Builtin::flat};

inline std::string_view to_string(Builtin b) {
  switch (b) {
    case Builtin::sin_xy: return "sin_xy";
    case Builtin::ellip: return "ellip";
    case Builtin::hyp: return "hyp";
    case Builtin::parab: return "parab";
    case Builtin::flat: return "flat";
  }
  return "?";
}

/// Formula text of a builtin in the expression grammar.
inline std::string_view builtin_formula(Builtin b) {
  switch (b) {
    case Builtin::sin_xy: return "sin(x*y)";
    case Builtin::ellip: return "-x^2 - y^2";
    case Builtin::hyp: return "x^2 - y^2";
    case Builtin::parab: return "y^2 - x^3";
    case Builtin::flat: return "0";
  }
  return "0";
}

inline std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (Builtin b : kAllBuiltins) {
    if (to_string(b) == name) return b;
  }
  return std::nullopt;
}

/// Exact jets of the builtins, written out by hand. Kept separate from the
/// parser path so the two can be cross-checked.
inline Jet2 builtin_jet(Builtin b, double x, double y) {
  switch (b) {
    case Builtin::sin_xy: {
      const double s = std::sin(x * y);
      const double c = std::cos(x * y);
      return Jet2{s, y * c, x * c, -y * y * s, c - x * y * s, -x * x * s};
    }
    case Builtin::ellip:
      return Jet2{-x * x - y * y, -2.0 * x, -2.0 * y, -2.0, 0.0, -2.0};
    case Builtin::hyp:
      return Jet2{x * x - y * y, 2.0 * x, -2.0 * y, 2.0, 0.0, -2.0};
    case Builtin::parab:
      return Jet2{y * y - x * x * x, -3.0 * x * x, 2.0 * y, -6.0 * x, 0.0, 2.0};
    case Builtin::flat:
      return Jet2{};
  }
  return Jet2{};
}

class Surface {
 public:
  static Surface builtin(Builtin b) { return Surface(b); }

  static Surface from_expression(std::string_view text) {
    return Surface(std::string(text), parse(text));
  }

  /// A builtin name, or else an expression in x and y.
  static Surface from_spec(std::string_view spec) {
    if (auto b = builtin_from_name(spec)) return builtin(*b);
    return from_expression(spec);
  }

  bool is_builtin() const { return builtin_.has_value(); }
  std::optional<Builtin> builtin_id() const { return builtin_; }

  /// Builtin identifier or the expression text.
  std::string name() const {
    return builtin_ ? std::string(to_string(*builtin_)) : text_;
  }

  std::string formula() const {
    return builtin_ ? std::string(builtin_formula(*builtin_)) : text_;
  }

  double value(double x, double y) const {
    return builtin_ ? builtin_jet(*builtin_, x, y).g : trees_->value().evaluate(x, y);
  }

  /// Throws DomainError outside the domain of g.
  Jet2 jet(double x, double y) const {
    Jet2 j = builtin_ ? builtin_jet(*builtin_, x, y) : trees_->evaluate(x, y);
    if (!j.all_finite()) throw DomainError("non-finite jet of '" + name() + "'");
    return j;
  }

 private:
  explicit Surface(Builtin b) : builtin_(b) {}
  Surface(std::string text, Expr e) : text_(std::move(text)), trees_(JetTrees(std::move(e))) {}

  std::optional<Builtin> builtin_;
  std::string text_;
  std::optional<JetTrees> trees_;
};

inline Jet2 surface_jet(const Surface& s, double x, double y) { return s.jet(x, y); }

/// K = (g_xx g_yy - g_xy^2) / (1 + g_x^2 + g_y^2)^2.
inline double gaussian_curvature(const Jet2& j) {
  const double w = 1.0 + j.gx * j.gx + j.gy * j.gy;
  return (j.gxx * j.gyy - j.gxy * j.gxy) / (w * w);
}

/// |g_xx g_yy - (K (1 + g_x^2 + g_y^2)^2 + g_xy^2)|.
inline double gauss_g_identity_residual(const Jet2& j) {
  const double k = gaussian_curvature(j);
  const double w = 1.0 + j.gx * j.gx + j.gy * j.gy;
  return std::abs(j.gxx * j.gyy - (k * w * w + j.gxy * j.gxy));
}

/// Outcome of the two sign implications relating K and g_xx g_yy.
///
/// Clause one: K >= 0 implies sign K = sign(g_xx g_yy). At K = 0 with
/// g_xy != 0 the product equals g_xy^2 > 0, so the clause is checked as
/// "K > 0 implies g_xx g_yy > 0" and "K = 0 implies g_xx g_yy >= 0".
/// Clause two: g_xx g_yy <= 0 implies K <= 0.
/// Zero means |value| <= eps.
struct GaussSignLemma {
  double K = 0.0;
  double gxx_gyy = 0.0;
  bool k_nonnegative = false;       // clause one applies
  bool clause_one_holds = true;
  bool product_nonpositive = false;  // clause two applies
  bool clause_two_holds = true;

  bool holds() const { return clause_one_holds && clause_two_holds; }
};

inline GaussSignLemma lemma_gauss_sign(const Jet2& j, double eps = 1e-9) {
  GaussSignLemma r;
  r.K = gaussian_curvature(j);
  r.gxx_gyy = j.gxx * j.gyy;
  r.k_nonnegative = r.K >= -eps;
  if (r.k_nonnegative) {
    r.clause_one_holds = r.K > eps ? r.gxx_gyy > eps : r.gxx_gyy >= -eps;
  }
  r.product_nonpositive = r.gxx_gyy <= eps;
  if (r.product_nonpositive) r.clause_two_holds = r.K <= eps;
  return r;
}

}  // namespace viewcurve
