#pragma once

#include <cmath>

namespace viewcurve {

/// Value and partial derivatives up to order two of a scalar function of (x, y).
struct Jet2 {
  double g = 0.0;
  double gx = 0.0;
  double gy = 0.0;
  double gxx = 0.0;
  double gxy = 0.0;
  double gyy = 0.0;

  bool all_finite() const {
    return std::isfinite(g) && std::isfinite(gx) && std::isfinite(gy) && std::isfinite(gxx) &&
           std::isfinite(gxy) && std::isfinite(gyy);
  }

  friend bool operator==(const Jet2&, const Jet2&) = default;
};

}  // namespace viewcurve
