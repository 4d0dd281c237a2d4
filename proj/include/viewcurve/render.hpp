#pragma once

// Sampling of projected curve families and SVG output.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "viewcurve/errors.hpp"
#include "viewcurve/projection.hpp"
#include "viewcurve/surface.hpp"

namespace viewcurve {

/// x-curves are parametrized by x (fixed y0); y-curves by y (fixed x0).
enum class FamilyTag { x_curve, y_curve };
enum class FamilySelection { x, y, both };

inline std::string_view to_string(FamilyTag t) { return t == FamilyTag::x_curve ? "x-curve" : "y-curve"; }

struct Polyline {
  FamilyTag tag = FamilyTag::y_curve;
  std::vector<Vec2> points;
};

struct BoundingBox {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();

  bool empty() const { return !(min_x <= max_x && min_y <= max_y); }

  void extend(const Vec2& p) {
    min_x = std::min(min_x, p.x());
    min_y = std::min(min_y, p.y());
    max_x = std::max(max_x, p.x());
    max_y = std::max(max_y, p.y());
  }
};

struct DrawingStyle {
  std::string background = "#ffffff";
  std::string x_curve_color = "#1f77b4";
  std::string y_curve_color = "#d62728";
  double x_curve_width = 1.0;
  double y_curve_width = 1.0;
};

struct CurveFamilyDrawing {
  std::vector<Polyline> polylines;
  BoundingBox bounds;
  DrawingStyle style;
};

struct SampleBox {
  double x0 = -1.0;
  double x1 = 1.0;
  double y0 = -1.0;
  double y1 = 1.0;
};

/// n_curves equispaced curves of each selected family, each sampled at n_pts
/// equispaced parameter values. x-curves precede y-curves.
inline CurveFamilyDrawing sample_family(const Surface& s, const ViewDirection& view,
                                        const SampleBox& box, int n_curves, int n_pts,
                                        FamilySelection family) {
  if (n_curves < 2 || n_pts < 2) throw ConfigError("n_curves and n_pts must be at least 2");
  if (!(box.x0 < box.x1) || !(box.y0 < box.y1)) throw ConfigError("sample box is degenerate");

  const Mat3 G = rotation_G(view.theta, view.phi);
  auto image = [&](double x, double y) -> Vec2 {
    const Vec2 p = (G * Vec3(x, y, s.value(x, y))).head<2>();
    if (!std::isfinite(p.x()) || !std::isfinite(p.y())) {
      throw DomainError("non-finite projected point");
    }
    return p;
  };
  auto lerp = [](double a, double b, int i, int n) { return a + (b - a) * i / (n - 1); };

  CurveFamilyDrawing d;
  auto add_family = [&](FamilyTag tag) {
    for (int c = 0; c < n_curves; ++c) {
      Polyline line;
      line.tag = tag;
      line.points.reserve(static_cast<std::size_t>(n_pts));
      for (int j = 0; j < n_pts; ++j) {
        const Vec2 p = tag == FamilyTag::y_curve
                           ? image(lerp(box.x0, box.x1, c, n_curves), lerp(box.y0, box.y1, j, n_pts))
                           : image(lerp(box.x0, box.x1, j, n_pts), lerp(box.y0, box.y1, c, n_curves));
        d.bounds.extend(p);
        line.points.push_back(p);
      }
      d.polylines.push_back(std::move(line));
    }
  };
  if (family != FamilySelection::y) add_family(FamilyTag::x_curve);
  if (family != FamilySelection::x) add_family(FamilyTag::y_curve);
  return d;
}

/// World-to-screen map: uniform scale plus translation fitting the bounding
/// box into the viewport with a 5% margin on every side, y flipped.
class ViewportTransform {
 public:
  ViewportTransform(const BoundingBox& b, int width_px, int height_px) {
    BoundingBox box = b;
    if (box.empty()) box = BoundingBox{-1.0, -1.0, 1.0, 1.0};
    double w = box.max_x - box.min_x;
    double h = box.max_y - box.min_y;
    // Collinear or single-point drawings get a square extent.
    const double extent = std::max({w, h, 0.0});
    if (extent == 0.0) w = h = 1.0;
    if (w == 0.0) w = extent;
    if (h == 0.0) h = extent;
    const double cx = 0.5 * (box.min_x + box.max_x);
    const double cy = 0.5 * (box.min_y + box.max_y);
    const double usable_w = 0.9 * width_px;
    const double usable_h = 0.9 * height_px;
    scale_ = std::min(usable_w / w, usable_h / h);
    offset_x_ = 0.5 * width_px - scale_ * cx;
    offset_y_ = 0.5 * height_px + scale_ * cy;
  }

  Vec2 to_screen(const Vec2& p) const {
    return Vec2(offset_x_ + scale_ * p.x(), offset_y_ - scale_ * p.y());
  }

  Vec2 to_world(const Vec2& q) const {
    return Vec2((q.x() - offset_x_) / scale_, (offset_y_ - q.y()) / scale_);
  }

  double scale() const { return scale_; }

 private:
  double scale_ = 1.0;
  double offset_x_ = 0.0;
  double offset_y_ = 0.0;
};

namespace detail {
inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}
}  // namespace detail

/// Standalone SVG 1.1 document: background rect, then one `g` per family
/// with one `path` per polyline. Coordinates carry 6 fractional digits.
inline std::string render_svg(const CurveFamilyDrawing& d, int width_px, int height_px) {
  if (width_px <= 0 || height_px <= 0) throw ConfigError("SVG dimensions must be positive");
  const ViewportTransform tf(d.bounds, width_px, height_px);
  const std::string w = std::to_string(width_px);
  const std::string h = std::to_string(height_px);

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h + "\" fill=\"" +
         d.style.background + "\"/>\n";

  for (FamilyTag tag : {FamilyTag::x_curve, FamilyTag::y_curve}) {
    bool any = false;
    for (const auto& line : d.polylines) any = any || line.tag == tag;
    if (!any) continue;
    const bool is_x = tag == FamilyTag::x_curve;
    out += "<g id=\"" + std::string(is_x ? "x-curves" : "y-curves") +
           "\" fill=\"none\" stroke=\"" + (is_x ? d.style.x_curve_color : d.style.y_curve_color) +
           "\" stroke-width=\"" + detail::fixed6(is_x ? d.style.x_curve_width : d.style.y_curve_width) +
           "\">\n";
    for (const auto& line : d.polylines) {
      if (line.tag != tag) continue;
      out += "<path d=\"";
      for (std::size_t i = 0; i < line.points.size(); ++i) {
        const Vec2 q = tf.to_screen(line.points[i]);
        out += (i == 0 ? "M" : " L");
        out += detail::fixed6(q.x()) + " " + detail::fixed6(q.y());
      }
      out += "\"/>\n";
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace viewcurve
