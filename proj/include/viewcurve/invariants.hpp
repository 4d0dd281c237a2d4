#pragma once

// Invariants of one-parameter families of plane curves f(u, v), and their
// closed forms for the projection map Phi.

#include <cmath>
#include <optional>
#include <string>

#include "viewcurve/errors.hpp"
#include "viewcurve/jet.hpp"
#include "viewcurve/projection.hpp"
#include "viewcurve/surface.hpp"

namespace viewcurve {

/// First and second partials of a planar map f(u, v).
struct PlanarMapJet {
  Vec2 f_u = Vec2::Zero();
  Vec2 f_v = Vec2::Zero();
  Vec2 f_uu = Vec2::Zero();
  Vec2 f_uv = Vec2::Zero();
  Vec2 f_vv = Vec2::Zero();
  std::optional<Vec2> value;
};

/// (u, v) = (x, y).
inline PlanarMapJet as_planar_map(const ProjectionJet& pj) {
  return PlanarMapJet{pj.phi_x, pj.phi_y, pj.phi_xx, pj.phi_xy, pj.phi_yy, pj.value};
}

enum class Along { u, v };

namespace detail {
inline const Vec2& first(const PlanarMapJet& j, Along a) { return a == Along::u ? j.f_u : j.f_v; }
inline const Vec2& second(const PlanarMapJet& j, Along a) { return a == Along::u ? j.f_uu : j.f_vv; }
}  // namespace detail

/// Signed curvature det(f_a, f_aa) / |f_a|^3 of the a-curves.
/// Throws RegularityError when |f_a| < eps.
inline double family_curvature(const PlanarMapJet& j, Along along,
                               double eps = kDefaultRegularityEps) {
  const Vec2& d1 = detail::first(j, along);
  const Vec2& d2 = detail::second(j, along);
  const double speed = d1.norm();
  if (!(speed >= eps)) {
    throw RegularityError(std::string("family is not regular along ") +
                          (along == Along::u ? "u" : "v"));
  }
  return det2(d1, d2) / (speed * speed * speed);
}

/// |f_a|^2. Defined for any smooth map.
inline double squared_velocity(const PlanarMapJet& j, Along along) {
  return detail::first(j, along).squaredNorm();
}

/// d/da |f_a|^2 = 2 <f_a, f_aa>.
inline double sv_derivative(const PlanarMapJet& j, Along along) {
  return 2.0 * detail::first(j, along).dot(detail::second(j, along));
}

// Closed forms for Phi. The curvature forms throw RegularityError when the
// base of the (.)^(3/2) denominator is below eps^2.

inline double closed_form_kappa_y(const Jet2& g, double theta, double phi,
                                  double eps = kDefaultRegularityEps) {
  const double q = std::cos(theta) * std::sin(phi) - g.gy * std::sin(theta);
  const double base = std::cos(phi) * std::cos(phi) + q * q;
  if (!(base >= eps * eps)) throw RegularityError("family is not regular along y");
  return -g.gyy * std::cos(phi) * std::sin(theta) / std::pow(base, 1.5);
}

inline double closed_form_kappa_x(const Jet2& g, double theta, double phi,
                                  double eps = kDefaultRegularityEps) {
  const double p = std::cos(theta) * std::cos(phi) - g.gx * std::sin(theta);
  const double base = std::sin(phi) * std::sin(phi) + p * p;
  if (!(base >= eps * eps)) throw RegularityError("family is not regular along x");
  return g.gxx * std::sin(phi) * std::sin(theta) / std::pow(base, 1.5);
}

/// 2 g_xx sin t P.
inline double closed_form_dsv_dx(const Jet2& g, double theta, double phi) {
  return 2.0 * g.gxx * std::sin(theta) *
         (-std::cos(theta) * std::cos(phi) + g.gx * std::sin(theta));
}

/// 2 g_yy sin t Q.
inline double closed_form_dsv_dy(const Jet2& g, double theta, double phi) {
  return 2.0 * g.gyy * std::sin(theta) *
         (-std::cos(theta) * std::sin(phi) + g.gy * std::sin(theta));
}

/// All invariants of Phi at one point. Curvatures are absent where the
/// corresponding family is not regular.
struct InvariantSample {
  std::optional<double> kappa_x;
  std::optional<double> kappa_y;
  double dsv_dx = 0.0;
  double dsv_dy = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double K = 0.0;
  Regularity regular_x = Regularity::singular;
  Regularity regular_y = Regularity::singular;
  Jet2 g;
};

inline InvariantSample invariant_sample(const Surface& s, const ViewDirection& view, double x,
                                        double y, double eps = kDefaultRegularityEps) {
  InvariantSample r;
  r.g = s.jet(x, y);
  const ProjectionJet pj = projection_jet(r.g, x, y, view);
  r.P = pj.P;
  r.Q = pj.Q;
  r.K = gaussian_curvature(r.g);
  r.regular_x = is_regular_x(pj, view.phi, eps);
  r.regular_y = is_regular_y(pj, view.phi, eps);
  if (r.regular_x == Regularity::regular) {
    r.kappa_x = closed_form_kappa_x(r.g, view.theta, view.phi, eps);
  }
  if (r.regular_y == Regularity::regular) {
    r.kappa_y = closed_form_kappa_y(r.g, view.theta, view.phi, eps);
  }
  r.dsv_dx = closed_form_dsv_dx(r.g, view.theta, view.phi);
  r.dsv_dy = closed_form_dsv_dy(r.g, view.theta, view.phi);
  return r;
}

}  // namespace viewcurve
