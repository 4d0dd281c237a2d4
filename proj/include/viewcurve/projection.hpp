#pragma once

// Orthogonal projection of a graph surface along a view direction.
//
// The view direction v = (sin t cos p, sin t sin p, cos t) is rotated onto
// (0, 0, -1) by G = R_y(pi - t) R_z(-p); the projection plane is then the
// xy-plane of the rotated frame and Phi = first two coordinates of G s(x, y).

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

#include <Eigen/Core>

#include "viewcurve/jet.hpp"
#include "viewcurve/surface.hpp"

namespace viewcurve {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// 2x2 determinant with columns a and b.
inline double det2(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

struct ViewDirection {
  double theta = std::numbers::pi;
  double phi = 0.0;
  Vec3 v = Vec3(0.0, 0.0, -1.0);

  static ViewDirection from_angles(double theta, double phi) {
    return ViewDirection{theta, phi,
                         Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                              std::cos(theta))};
  }
};

inline Mat3 rotation_y(double a) {
  Mat3 r;
  r << std::cos(a), 0.0, std::sin(a),
       0.0, 1.0, 0.0,
       -std::sin(a), 0.0, std::cos(a);
  return r;
}

inline Mat3 rotation_z(double a) {
  Mat3 r;
  r << std::cos(a), -std::sin(a), 0.0,
       std::sin(a), std::cos(a), 0.0,
       0.0, 0.0, 1.0;
  return r;
}

/// G = R_y(pi - theta) R_z(-phi); maps the view direction to (0, 0, -1).
inline Mat3 rotation_G(double theta, double phi) {
  return rotation_y(std::numbers::pi - theta) * rotation_z(-phi);
}

/// Projected image of a point of R^3 in the rotated frame.
inline Vec2 project_point(const ViewDirection& view, const Vec3& p) {
  return (rotation_G(view.theta, view.phi) * p).head<2>();
}

/// Second-order jet of Phi at a point, plus P = first component of Phi_x and
/// Q = first component of Phi_y.
struct ProjectionJet {
  Vec2 value = Vec2::Zero();
  Vec2 phi_x = Vec2::Zero();
  Vec2 phi_y = Vec2::Zero();
  Vec2 phi_xx = Vec2::Zero();
  Vec2 phi_xy = Vec2::Zero();
  Vec2 phi_yy = Vec2::Zero();
  double P = 0.0;
  double Q = 0.0;
};

/// P = -cos t cos p + g_x sin t.
inline double projection_P(const Jet2& g, double theta, double phi) {
  return -std::cos(theta) * std::cos(phi) + g.gx * std::sin(theta);
}

/// Q = -cos t sin p + g_y sin t.
inline double projection_Q(const Jet2& g, double theta, double phi) {
  return -std::cos(theta) * std::sin(phi) + g.gy * std::sin(theta);
}

/// Closed-form jet of Phi from the jet of g. Only the first component of Phi
/// depends on g, so all second partials are (g_** sin t, 0).
inline ProjectionJet projection_jet(const Jet2& g, double x, double y, const ViewDirection& view) {
  const double st = std::sin(view.theta);
  const double ct = std::cos(view.theta);
  const double sp = std::sin(view.phi);
  const double cp = std::cos(view.phi);
  ProjectionJet pj;
  pj.P = projection_P(g, view.theta, view.phi);
  pj.Q = projection_Q(g, view.theta, view.phi);
  pj.value = Vec2(g.g * st - x * ct * cp - y * ct * sp, y * cp - x * sp);
  pj.phi_x = Vec2(pj.P, -sp);
  pj.phi_y = Vec2(pj.Q, cp);
  pj.phi_xx = Vec2(g.gxx * st, 0.0);
  pj.phi_xy = Vec2(g.gxy * st, 0.0);
  pj.phi_yy = Vec2(g.gyy * st, 0.0);
  return pj;
}

inline ProjectionJet projection_jet(const Surface& s, const ViewDirection& view, double x, double y) {
  return projection_jet(s.jet(x, y), x, y, view);
}

enum class Regularity { regular, singular, marginal };

inline std::string_view to_string(Regularity r) {
  switch (r) {
    case Regularity::regular: return "regular";
    case Regularity::singular: return "singular";
    case Regularity::marginal: return "marginal";
  }
  return "?";
}

inline constexpr double kDefaultRegularityEps = 1e-9;

/// Below this both trig and jet factors count as exact zeros.
inline constexpr double kMachineZero = 8.0 * std::numeric_limits<double>::epsilon();

namespace detail {
inline Regularity classify_regularity(double trig, double first_component, double eps) {
  const double m = std::max(std::abs(trig), std::abs(first_component));
  if (m > eps) return Regularity::regular;
  if (m <= kMachineZero) return Regularity::singular;
  return Regularity::marginal;
}
}  // namespace detail

/// Phi is a regular family in x iff sin(phi) != 0 or P != 0.
/// `regular` guarantees |Phi_x| > eps since |Phi_x| >= max(|sin phi|, |P|).
inline Regularity is_regular_x(const ProjectionJet& pj, double phi_angle,
                               double eps = kDefaultRegularityEps) {
  return detail::classify_regularity(std::sin(phi_angle), pj.P, eps);
}

/// Phi is a regular family in y iff cos(phi) != 0 or Q != 0.
inline Regularity is_regular_y(const ProjectionJet& pj, double phi_angle,
                               double eps = kDefaultRegularityEps) {
  return detail::classify_regularity(std::cos(phi_angle), pj.Q, eps);
}

}  // namespace viewcurve
