#pragma once

// Numerical verification of the projection formulas: an independent
// finite-difference oracle, residual checks of the four product identities,
// sign laws, and a seeded randomized suite that aggregates everything.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "viewcurve/errors.hpp"
#include "viewcurve/invariants.hpp"
#include "viewcurve/projection.hpp"
#include "viewcurve/surface.hpp"

namespace viewcurve {

inline constexpr double kDefaultEpsSign = 1e-9;
inline constexpr double kDefaultFdStep = 1e-5;
/// Second differences divide roundoff by h^2; at 1e-5 that is ~1e-5 on
/// unit-sized values, at 1e-4 ~1e-7 with truncation error of the same order.
inline constexpr double kDefaultFdSecondStep = 1e-4;

// ---------------------------------------------------------------------------
// Signs

enum class Sign { positive, negative, indeterminate };

inline Sign sign_of(double value, double eps = kDefaultEpsSign) {
  if (value > eps) return Sign::positive;
  if (value < -eps) return Sign::negative;
  return Sign::indeterminate;
}

inline std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::positive: return "+";
    case Sign::negative: return "-";
    case Sign::indeterminate: return "0";
  }
  return "?";
}

inline Sign sign_product(std::initializer_list<Sign> factors) {
  bool negative = false;
  for (Sign s : factors) {
    if (s == Sign::indeterminate) return Sign::indeterminate;
    negative ^= (s == Sign::negative);
  }
  return negative ? Sign::negative : Sign::positive;
}

inline Sign flip(Sign s) {
  if (s == Sign::positive) return Sign::negative;
  if (s == Sign::negative) return Sign::positive;
  return s;
}

// ---------------------------------------------------------------------------
// Finite-difference oracle

/// Phi evaluated directly from its defining display, given g(x, y).
inline Vec2 projection_display(const Surface& s, const ViewDirection& view, double x, double y) {
  const double st = std::sin(view.theta);
  const double ct = std::cos(view.theta);
  const double sp = std::sin(view.phi);
  const double cp = std::cos(view.phi);
  return Vec2(s.value(x, y) * st - x * ct * cp - y * ct * sp, y * cp - x * sp);
}

/// Central differences of the display: first partials (f(+h) - f(-h)) / 2h,
/// pure second partials (f(+h2) - 2 f(0) + f(-h2)) / h2^2, mixed partial by
/// the four-corner stencil with step h2. P and Q come from finite-difference
/// g_x, g_y.
inline ProjectionJet fd_projection_jet(const Surface& s, const ViewDirection& view, double x,
                                       double y, double h = kDefaultFdStep,
                                       double h2 = kDefaultFdSecondStep) {
  if (!(h > 0.0) || !(h2 > 0.0)) throw ConfigError("finite-difference step must be positive");
  auto phi = [&](double px, double py) { return projection_display(s, view, px, py); };
  const Vec2 c = phi(x, y);

  ProjectionJet pj;
  pj.value = c;
  pj.phi_x = (phi(x + h, y) - phi(x - h, y)) / (2.0 * h);
  pj.phi_y = (phi(x, y + h) - phi(x, y - h)) / (2.0 * h);
  pj.phi_xx = (phi(x + h2, y) - 2.0 * c + phi(x - h2, y)) / (h2 * h2);
  pj.phi_yy = (phi(x, y + h2) - 2.0 * c + phi(x, y - h2)) / (h2 * h2);
  pj.phi_xy = (phi(x + h2, y + h2) - phi(x + h2, y - h2) - phi(x - h2, y + h2) +
               phi(x - h2, y - h2)) /
              (4.0 * h2 * h2);

  const double gx = (s.value(x + h, y) - s.value(x - h, y)) / (2.0 * h);
  const double gy = (s.value(x, y + h) - s.value(x, y - h)) / (2.0 * h);
  const double st = std::sin(view.theta);
  pj.P = -std::cos(view.theta) * std::cos(view.phi) + gx * st;
  pj.Q = -std::cos(view.theta) * std::sin(view.phi) + gy * st;
  return pj;
}

// ---------------------------------------------------------------------------
// Product identities

enum class TheoremId { kappa_y_dsv_x, kappa_x_dsv_y, kappa_x_kappa_y, dsv_x_dsv_y };

inline constexpr std::array<TheoremId, 4> kAllTheorems = {
    TheoremId::kappa_y_dsv_x, TheoremId::kappa_x_dsv_y, TheoremId::kappa_x_kappa_y,
    TheoremId::dsv_x_dsv_y};

inline std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::kappa_y_dsv_x: return "kappa_y_dsv_x";
    case TheoremId::kappa_x_dsv_y: return "kappa_x_dsv_y";
    case TheoremId::kappa_x_kappa_y: return "kappa_x_kappa_y";
    case TheoremId::dsv_x_dsv_y: return "dsv_x_dsv_y";
  }
  return "?";
}

struct TheoremResidual {
  TheoremId id = TheoremId::dsv_x_dsv_y;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_residual = 0.0;
  double rel_residual = 0.0;  // abs_residual / max(1, |lhs|, |rhs|)
  bool hypotheses_met = false;
  bool within_tolerance = true;
};

namespace detail {

inline TheoremResidual make_residual(TheoremId id, double lhs, double rhs, double tol) {
  TheoremResidual r;
  r.id = id;
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_residual = std::abs(lhs - rhs);
  r.rel_residual = r.abs_residual / std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.hypotheses_met = true;
  r.within_tolerance = r.rel_residual <= tol;
  return r;
}

inline TheoremResidual unmet(TheoremId id) {
  TheoremResidual r;
  r.id = id;
  return r;
}

inline double sin2(double a) { return std::sin(a) * std::sin(a); }
inline double cos2(double a) { return std::cos(a) * std::cos(a); }

}  // namespace detail

/// Right-hand sides, written from the g-jet alone.
inline double thm_rhs(TheoremId id, const Jet2& g, const ViewDirection& view) {
  const double t = view.theta;
  const double p = view.phi;
  const double P = projection_P(g, t, p);
  const double Q = projection_Q(g, t, p);
  const double gg = g.gxx * g.gyy;
  switch (id) {
    case TheoremId::kappa_y_dsv_x:
      return -2.0 * gg * P * std::cos(p) * detail::sin2(t) /
             std::pow(detail::cos2(p) + Q * Q, 1.5);
    case TheoremId::kappa_x_dsv_y:
      return 2.0 * gg * Q * std::sin(p) * detail::sin2(t) /
             std::pow(detail::sin2(p) + P * P, 1.5);
    case TheoremId::kappa_x_kappa_y:
      return -gg * std::sin(p) * std::cos(p) * detail::sin2(t) /
             (std::pow(detail::sin2(p) + P * P, 1.5) * std::pow(detail::cos2(p) + Q * Q, 1.5));
    case TheoremId::dsv_x_dsv_y:
      return 4.0 * gg * P * Q * detail::sin2(t);
  }
  return 0.0;
}

/// Left-hand sides through the generic family invariants of a jet of Phi.
inline double thm_lhs(TheoremId id, const ProjectionJet& pj, double eps = kDefaultRegularityEps) {
  const PlanarMapJet f = as_planar_map(pj);
  switch (id) {
    case TheoremId::kappa_y_dsv_x:
      return family_curvature(f, Along::v, eps) * sv_derivative(f, Along::u);
    case TheoremId::kappa_x_dsv_y:
      return family_curvature(f, Along::u, eps) * sv_derivative(f, Along::v);
    case TheoremId::kappa_x_kappa_y:
      return family_curvature(f, Along::u, eps) * family_curvature(f, Along::v, eps);
    case TheoremId::dsv_x_dsv_y:
      return sv_derivative(f, Along::u) * sv_derivative(f, Along::v);
  }
  return 0.0;
}

/// Regularity hypotheses of each identity, judged on the exact jet.
inline bool thm_hypotheses(TheoremId id, const ProjectionJet& exact, const ViewDirection& view,
                           double eps = kDefaultRegularityEps) {
  const bool rx = is_regular_x(exact, view.phi, eps) == Regularity::regular;
  const bool ry = is_regular_y(exact, view.phi, eps) == Regularity::regular;
  switch (id) {
    case TheoremId::kappa_y_dsv_x: return ry;
    case TheoremId::kappa_x_dsv_y: return rx;
    case TheoremId::kappa_x_kappa_y: return rx && ry;
    case TheoremId::dsv_x_dsv_y: return true;
  }
  return false;
}

/// Residual of one identity with the left side taken from `lhs_jet` (exact or
/// finite-difference) and hypotheses judged on `exact`.
inline TheoremResidual check_theorem(TheoremId id, const Jet2& g, const ProjectionJet& exact,
                                     const ProjectionJet& lhs_jet, const ViewDirection& view,
                                     double tol, double eps = kDefaultRegularityEps) {
  if (!thm_hypotheses(id, exact, view, eps)) return detail::unmet(id);
  double lhs = 0.0;
  try {
    lhs = thm_lhs(id, lhs_jet, eps);
  } catch (const RegularityError&) {
    return detail::unmet(id);
  }
  return detail::make_residual(id, lhs, thm_rhs(id, g, view), tol);
}

inline TheoremResidual check_theorem(TheoremId id, const Surface& s, const ViewDirection& view,
                                     double x, double y, double tol,
                                     double eps = kDefaultRegularityEps) {
  const Jet2 g = s.jet(x, y);
  const ProjectionJet pj = projection_jet(g, x, y, view);
  return check_theorem(id, g, pj, pj, view, tol, eps);
}

inline TheoremResidual check_thm_y_zeta(const Surface& s, const ViewDirection& view, double x,
                                        double y, double tol) {
  return check_theorem(TheoremId::kappa_y_dsv_x, s, view, x, y, tol);
}

inline TheoremResidual check_thm_x_zeta(const Surface& s, const ViewDirection& view, double x,
                                        double y, double tol) {
  return check_theorem(TheoremId::kappa_x_dsv_y, s, view, x, y, tol);
}

inline TheoremResidual check_thm_xy_curvature(const Surface& s, const ViewDirection& view,
                                              double x, double y, double tol) {
  return check_theorem(TheoremId::kappa_x_kappa_y, s, view, x, y, tol);
}

inline TheoremResidual check_thm_xy_sv(const Surface& s, const ViewDirection& view, double x,
                                       double y, double tol) {
  return check_theorem(TheoremId::dsv_x_dsv_y, s, view, x, y, tol);
}

// ---------------------------------------------------------------------------
// Sign laws

enum class SignLawId {
  // sign identities at an arbitrary point
  kappa_y_dsv_x,
  kappa_x_dsv_y,
  kappa_x_kappa_y,
  dsv_x_dsv_y,
  // the same products at a critical point of g with g_xy = 0, against sign K
  critical_kappa_y_dsv_x,
  critical_kappa_x_dsv_y,
  critical_kappa_x_kappa_y,
  critical_dsv_x_dsv_y,
};

inline constexpr std::array<SignLawId, 8> kAllSignLaws = {
    SignLawId::kappa_y_dsv_x,          SignLawId::kappa_x_dsv_y,
    SignLawId::kappa_x_kappa_y,        SignLawId::dsv_x_dsv_y,
    SignLawId::critical_kappa_y_dsv_x, SignLawId::critical_kappa_x_dsv_y,
    SignLawId::critical_kappa_x_kappa_y, SignLawId::critical_dsv_x_dsv_y};

inline std::string_view to_string(SignLawId id) {
  switch (id) {
    case SignLawId::kappa_y_dsv_x: return "sign_kappa_y_dsv_x";
    case SignLawId::kappa_x_dsv_y: return "sign_kappa_x_dsv_y";
    case SignLawId::kappa_x_kappa_y: return "sign_kappa_x_kappa_y";
    case SignLawId::dsv_x_dsv_y: return "sign_dsv_x_dsv_y";
    case SignLawId::critical_kappa_y_dsv_x: return "critical_kappa_y_dsv_x";
    case SignLawId::critical_kappa_x_dsv_y: return "critical_kappa_x_dsv_y";
    case SignLawId::critical_kappa_x_kappa_y: return "critical_kappa_x_kappa_y";
    case SignLawId::critical_dsv_x_dsv_y: return "critical_dsv_x_dsv_y";
  }
  return "?";
}

enum class Verdict { agree, disagree, skipped };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::agree: return "agree";
    case Verdict::disagree: return "disagree";
    case Verdict::skipped: return "skipped";
  }
  return "?";
}

struct SignLawResult {
  SignLawId id = SignLawId::kappa_y_dsv_x;
  bool hypotheses_met = false;
  Sign lhs = Sign::indeterminate;
  Sign rhs = Sign::indeterminate;
  Verdict verdict = Verdict::skipped;
  /// Critical-point laws only: sign K(0) was indeterminate.
  bool k_zero_boundary = false;
};

using SignLawRecord = std::array<SignLawResult, 4>;

namespace detail {

inline SignLawResult judge(SignLawId id, bool hypotheses, Sign lhs, Sign rhs) {
  SignLawResult r;
  r.id = id;
  r.hypotheses_met = hypotheses;
  if (!hypotheses) return r;
  r.lhs = lhs;
  r.rhs = rhs;
  if (lhs == Sign::indeterminate || rhs == Sign::indeterminate) {
    r.verdict = Verdict::skipped;
  } else {
    r.verdict = lhs == rhs ? Verdict::agree : Verdict::disagree;
  }
  return r;
}

// Generic-path invariants of the exact jet of Phi; curvatures absent where
// the family is not regular.
struct GenericInvariants {
  std::optional<double> kappa_x;
  std::optional<double> kappa_y;
  double dsv_dx = 0.0;
  double dsv_dy = 0.0;
};

inline GenericInvariants generic_invariants(const ProjectionJet& pj, const ViewDirection& view,
                                            double eps) {
  GenericInvariants r;
  const PlanarMapJet f = as_planar_map(pj);
  if (is_regular_x(pj, view.phi, eps) == Regularity::regular) {
    r.kappa_x = family_curvature(f, Along::u, eps);
  }
  if (is_regular_y(pj, view.phi, eps) == Regularity::regular) {
    r.kappa_y = family_curvature(f, Along::v, eps);
  }
  r.dsv_dx = sv_derivative(f, Along::u);
  r.dsv_dy = sv_derivative(f, Along::v);
  return r;
}

}  // namespace detail

/// Sign identities at (x, y). Each law requires sin(theta) != 0 and the
/// regularity its curvature factors need; a law whose factors are not all
/// sign-determinate is marked skipped.
inline SignLawRecord check_sign_corollaries(const Surface& s, const ViewDirection& view, double x,
                                            double y, double eps_sign = kDefaultEpsSign,
                                            double eps_regular = kDefaultRegularityEps) {
  const Jet2 g = s.jet(x, y);
  const ProjectionJet pj = projection_jet(g, x, y, view);
  const auto inv = detail::generic_invariants(pj, view, eps_regular);
  const bool sin_theta_ok = std::abs(std::sin(view.theta)) > eps_sign;

  auto sg = [&](double v) { return sign_of(v, eps_sign); };
  auto sg_opt = [&](const std::optional<double>& v) {
    return v ? sg(*v) : Sign::indeterminate;
  };
  const Sign gg = sg(g.gxx * g.gyy);
  const Sign P = sg(pj.P);
  const Sign Q = sg(pj.Q);

  SignLawRecord rec;
  rec[0] = detail::judge(SignLawId::kappa_y_dsv_x, sin_theta_ok && inv.kappa_y.has_value(),
                         sign_product({sg_opt(inv.kappa_y), sg(inv.dsv_dx)}),
                         flip(sign_product({gg, P, sg(std::cos(view.phi))})));
  rec[1] = detail::judge(SignLawId::kappa_x_dsv_y, sin_theta_ok && inv.kappa_x.has_value(),
                         sign_product({sg_opt(inv.kappa_x), sg(inv.dsv_dy)}),
                         sign_product({gg, Q, sg(std::sin(view.phi))}));
  rec[2] = detail::judge(SignLawId::kappa_x_kappa_y,
                         sin_theta_ok && inv.kappa_x.has_value() && inv.kappa_y.has_value(),
                         sign_product({sg_opt(inv.kappa_x), sg_opt(inv.kappa_y)}),
                         flip(sign_product({gg, sg(std::sin(2.0 * view.phi))})));
  rec[3] = detail::judge(SignLawId::dsv_x_dsv_y, sin_theta_ok,
                         sign_product({sg(inv.dsv_dx), sg(inv.dsv_dy)}),
                         sign_product({gg, P, Q}));
  return rec;
}

inline constexpr double kCriticalPointTol = 1e-12;

/// True when g_x = g_y = g_xy = 0 at the origin within 1e-12.
inline bool origin_is_principal_critical_point(const Surface& s) {
  const Jet2 g = s.jet(0.0, 0.0);
  return std::abs(g.gx) <= kCriticalPointTol && std::abs(g.gy) <= kCriticalPointTol &&
         std::abs(g.gxy) <= kCriticalPointTol;
}

/// Sign laws at the origin of a surface with g_x = g_y = g_xy = 0 there.
/// Throws PreconditionError otherwise.
inline SignLawRecord check_critical_props(const Surface& s, const ViewDirection& view,
                                          double eps_sign = kDefaultEpsSign,
                                          double eps_regular = kDefaultRegularityEps) {
  if (!origin_is_principal_critical_point(s)) {
    throw PreconditionError("origin is not a critical point of g with g_xy = 0");
  }
  const Jet2 g = s.jet(0.0, 0.0);
  const ProjectionJet pj = projection_jet(g, 0.0, 0.0, view);
  const auto inv = detail::generic_invariants(pj, view, eps_regular);
  const double t = view.theta;
  const double p = view.phi;

  auto sg = [&](double v) { return sign_of(v, eps_sign); };
  auto sg_opt = [&](const std::optional<double>& v) {
    return v ? sg(*v) : Sign::indeterminate;
  };
  auto nonzero = [&](double v) { return std::abs(v) > eps_sign; };
  const Sign K = sg(gaussian_curvature(g));
  const Sign cos_t = sg(std::cos(t));
  const Sign sin_2p = sg(std::sin(2.0 * p));

  SignLawRecord rec;
  rec[0] = detail::judge(SignLawId::critical_kappa_y_dsv_x,
                         nonzero(std::sin(2.0 * t) * std::cos(p)) && inv.kappa_y.has_value(),
                         sign_product({sg_opt(inv.kappa_y), sg(inv.dsv_dx)}),
                         sign_product({K, cos_t}));
  rec[1] = detail::judge(SignLawId::critical_kappa_x_dsv_y,
                         nonzero(std::sin(2.0 * t) * std::sin(p)) && inv.kappa_x.has_value(),
                         sign_product({sg_opt(inv.kappa_x), sg(inv.dsv_dy)}),
                         flip(sign_product({K, cos_t})));
  rec[2] = detail::judge(SignLawId::critical_kappa_x_kappa_y,
                         nonzero(std::sin(t)) && inv.kappa_x.has_value() && inv.kappa_y.has_value(),
                         sign_product({sg_opt(inv.kappa_x), sg_opt(inv.kappa_y)}),
                         flip(sign_product({K, sin_2p})));
  rec[3] = detail::judge(SignLawId::critical_dsv_x_dsv_y, nonzero(std::sin(2.0 * t)),
                         sign_product({sg(inv.dsv_dx), sg(inv.dsv_dy)}),
                         sign_product({K, sin_2p}));
  for (auto& r : rec) r.k_zero_boundary = r.hypotheses_met && K == Sign::indeterminate;
  return rec;
}

// ---------------------------------------------------------------------------
// Randomized suite

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  double tol = 1e-9;
  double fd_tol = 1e-5;
  double fd_step = kDefaultFdStep;
  double fd_second_step = kDefaultFdSecondStep;
  double eps_sign = kDefaultEpsSign;
  double eps_regular = kDefaultRegularityEps;
  /// Half-width of the angle bands excluded in the sign-law draws.
  double sign_band = 1e-3;
  std::vector<std::string> surfaces = {"sin_xy", "ellip", "hyp", "parab", "flat"};
  Interval theta{0.0, std::numbers::pi};
  Interval phi{0.0, 2.0 * std::numbers::pi};
  Interval box_x{-1.0, 1.0};
  Interval box_y{-1.0, 1.0};
};

struct TheoremStats {
  TheoremId id = TheoremId::dsv_x_dsv_y;
  std::size_t samples = 0;
  std::size_t hypotheses_met = 0;
  double max_abs_residual = 0.0;
  double max_rel_residual = 0.0;
  std::size_t failures = 0;
  double fd_max_abs_residual = 0.0;
  double fd_max_rel_residual = 0.0;
  std::size_t fd_failures = 0;
  std::vector<std::size_t> failure_samples;  // sorted sample indices
};

struct SignLawStats {
  SignLawId id = SignLawId::kappa_y_dsv_x;
  std::size_t samples = 0;
  std::size_t hypotheses_met = 0;
  std::size_t agree = 0;
  std::size_t disagree = 0;
  std::size_t skipped = 0;
  std::size_t k_zero_boundary = 0;
  std::vector<std::size_t> disagreement_samples;

  bool consistent() const { return agree + disagree + skipped == hypotheses_met; }
};

struct LemmaStats {
  std::size_t samples = 0;
  std::size_t clause_one_applicable = 0;
  std::size_t clause_two_applicable = 0;
  std::size_t violations = 0;
  double max_identity_residual = 0.0;
  std::vector<std::size_t> violation_samples;
};

struct VerificationReport {
  SuiteConfig config;
  std::size_t samples = 0;
  std::size_t domain_errors = 0;
  std::array<TheoremStats, 4> theorems{};
  std::array<SignLawStats, 8> sign_laws{};
  LemmaStats lemma;
  double runtime_seconds = 0.0;

  bool passed() const {
    for (const auto& t : theorems) {
      if (t.failures != 0 || t.fd_failures != 0) return false;
    }
    for (const auto& s : sign_laws) {
      if (s.disagree != 0) return false;
    }
    return lemma.violations == 0;
  }
};

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; independent of the
// standard library's distribution implementations.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, const Interval& iv) {
  return iv.lo + (iv.hi - iv.lo) * unit_uniform(rng);
}

inline bool near_multiple_of_half_pi(double angle, double band) {
  const double half_pi = std::numbers::pi / 2.0;
  return std::abs(angle - std::round(angle / half_pi) * half_pi) < band;
}

inline void record_residual(TheoremStats& st, const TheoremResidual& exact,
                            const std::optional<TheoremResidual>& fd, std::size_t index) {
  ++st.samples;
  if (!exact.hypotheses_met) return;
  ++st.hypotheses_met;
  st.max_abs_residual = std::max(st.max_abs_residual, exact.abs_residual);
  st.max_rel_residual = std::max(st.max_rel_residual, exact.rel_residual);
  bool failed = !exact.within_tolerance;
  if (fd && fd->hypotheses_met) {
    st.fd_max_abs_residual = std::max(st.fd_max_abs_residual, fd->abs_residual);
    st.fd_max_rel_residual = std::max(st.fd_max_rel_residual, fd->rel_residual);
    if (!fd->within_tolerance) {
      ++st.fd_failures;
      failed = true;
    }
  }
  if (!exact.within_tolerance) ++st.failures;
  if (failed) st.failure_samples.push_back(index);
}

inline void record_sign(SignLawStats& st, const SignLawResult& r, std::size_t index) {
  ++st.samples;
  if (!r.hypotheses_met) return;
  ++st.hypotheses_met;
  switch (r.verdict) {
    case Verdict::agree: ++st.agree; break;
    case Verdict::disagree:
      ++st.disagree;
      st.disagreement_samples.push_back(index);
      break;
    case Verdict::skipped: ++st.skipped; break;
  }
  if (r.k_zero_boundary) ++st.k_zero_boundary;
}

}  // namespace detail

/// Deterministic given the seed. Per sample: one surface, one unrestricted
/// view and point for the residual checks, and one view drawn away from the
/// bands |theta - k pi/2| < band, |phi - k pi/2| < band for the sign laws.
/// Critical-point laws run at the origin of eligible surfaces.
inline VerificationReport run_suite(const SuiteConfig& config) {
  if (config.surfaces.empty()) throw ConfigError("suite needs at least one surface");
  if (!(config.tol > 0.0) || !(config.fd_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (!(config.fd_step > 0.0) || !(config.fd_second_step > 0.0)) throw ConfigError("finite-difference step must be positive");
  if (!(config.eps_sign >= 0.0) || !(config.eps_regular > 0.0)) {
    throw ConfigError("sign and regularity thresholds must be nonnegative / positive");
  }
  for (const Interval* iv : {&config.theta, &config.phi, &config.box_x, &config.box_y}) {
    if (!(iv->lo <= iv->hi) || !std::isfinite(iv->lo) || !std::isfinite(iv->hi)) {
      throw ConfigError("sampling intervals must be finite with lo <= hi");
    }
  }
  if (config.sign_band < 0.0 || config.sign_band * 4.0 >= std::numbers::pi) {
    throw ConfigError("sign band must lie in [0, pi/4)");
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<Surface> surfaces;
  std::vector<bool> critical;
  surfaces.reserve(config.surfaces.size());
  for (const auto& spec : config.surfaces) {
    surfaces.push_back(Surface::from_spec(spec));
    bool ok = false;
    try {
      ok = origin_is_principal_critical_point(surfaces.back());
    } catch (const DomainError&) {
      ok = false;
    }
    critical.push_back(ok);
  }

  VerificationReport rep;
  rep.config = config;
  for (std::size_t k = 0; k < 4; ++k) rep.theorems[k].id = kAllTheorems[k];
  for (std::size_t k = 0; k < 8; ++k) rep.sign_laws[k].id = kAllSignLaws[k];

  std::mt19937_64 rng(config.seed);
  const double band = config.sign_band;
  for (std::size_t i = 0; i < config.samples; ++i) {
    const std::size_t si = static_cast<std::size_t>(detail::unit_uniform(rng) * surfaces.size());
    const Surface& s = surfaces[std::min(si, surfaces.size() - 1)];
    const auto view = ViewDirection::from_angles(detail::uniform_in(rng, config.theta),
                                                 detail::uniform_in(rng, config.phi));
    const double x = detail::uniform_in(rng, config.box_x);
    const double y = detail::uniform_in(rng, config.box_y);

    ViewDirection sign_view;
    for (int attempt = 0;; ++attempt) {
      const double t = detail::uniform_in(rng, config.theta);
      const double p = detail::uniform_in(rng, config.phi);
      if (band == 0.0 || attempt > 1000 ||
          (!detail::near_multiple_of_half_pi(t, band) &&
           !detail::near_multiple_of_half_pi(p, band))) {
        sign_view = ViewDirection::from_angles(t, p);
        break;
      }
    }
    const double sx = detail::uniform_in(rng, config.box_x);
    const double sy = detail::uniform_in(rng, config.box_y);

    ++rep.samples;
    // Everything is evaluated before anything is tallied, so a domain error
    // drops the whole sample.
    std::array<TheoremResidual, 4> exact_res{}, fd_res{};
    SignLawRecord cors{}, props{};
    const std::size_t surface_index = std::min(si, surfaces.size() - 1);
    GaussSignLemma lemma;
    double identity_residual = 0.0;
    try {
      const Jet2 g = s.jet(x, y);
      const ProjectionJet exact = projection_jet(g, x, y, view);
      const ProjectionJet fd = fd_projection_jet(s, view, x, y, config.fd_step, config.fd_second_step);
      for (std::size_t k = 0; k < 4; ++k) {
        exact_res[k] = check_theorem(kAllTheorems[k], g, exact, exact, view, config.tol,
                                     config.eps_regular);
        fd_res[k] = check_theorem(kAllTheorems[k], g, exact, fd, view, config.fd_tol,
                                  config.eps_regular);
      }
      cors = check_sign_corollaries(s, sign_view, sx, sy, config.eps_sign, config.eps_regular);
      if (critical[surface_index]) {
        props = check_critical_props(s, sign_view, config.eps_sign, config.eps_regular);
      }
      const Jet2 gs = s.jet(sx, sy);
      lemma = lemma_gauss_sign(gs, config.eps_sign);
      identity_residual = gauss_g_identity_residual(gs);
    } catch (const DomainError&) {
      ++rep.domain_errors;
      continue;
    }

    for (std::size_t k = 0; k < 4; ++k) {
      detail::record_residual(rep.theorems[k], exact_res[k], fd_res[k], i);
      detail::record_sign(rep.sign_laws[k], cors[k], i);
      if (critical[surface_index]) detail::record_sign(rep.sign_laws[4 + k], props[k], i);
    }
    ++rep.lemma.samples;
    rep.lemma.clause_one_applicable += lemma.k_nonnegative ? 1 : 0;
    rep.lemma.clause_two_applicable += lemma.product_nonpositive ? 1 : 0;
    rep.lemma.max_identity_residual = std::max(rep.lemma.max_identity_residual, identity_residual);
    if (!lemma.holds()) {
      ++rep.lemma.violations;
      rep.lemma.violation_samples.push_back(i);
    }
  }
  rep.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace viewcurve
