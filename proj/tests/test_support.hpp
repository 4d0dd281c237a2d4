#pragma once

// Test-only helpers: seeded generators, finite-difference stencils that do
// not share code with the library, and random polynomial surfaces whose
// jets are known in closed form.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "viewcurve/jet.hpp"

namespace viewcurve::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }

  int integer(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

using ScalarField = std::function<double(double, double)>;

/// Jet of f by 5-point stencils (first and pure second partials) and the
/// 4-corner stencil for the mixed partial.
inline Jet2 fd5_jet(const ScalarField& f, double x, double y, double h) {
  auto d1 = [&](auto&& along) {
    return (-along(2 * h) + 8 * along(h) - 8 * along(-h) + along(-2 * h)) / (12 * h);
  };
  auto d2 = [&](auto&& along) {
    return (-along(2 * h) + 16 * along(h) - 30 * along(0.0) + 16 * along(-h) - along(-2 * h)) /
           (12 * h * h);
  };
  auto fx = [&](double s) { return f(x + s, y); };
  auto fy = [&](double s) { return f(x, y + s); };
  Jet2 j;
  j.g = f(x, y);
  j.gx = d1(fx);
  j.gy = d1(fy);
  j.gxx = d2(fx);
  j.gyy = d2(fy);
  j.gxy = (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) + f(x - h, y - h)) / (4 * h * h);
  return j;
}

/// c * x^a * y^b
struct Monomial {
  double c;
  int a;
  int b;
};

struct Polynomial {
  std::vector<Monomial> terms;

  std::string text() const {
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const auto& t = terms[i];
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", std::abs(t.c));
      if (i == 0) {
        s += t.c < 0 ? "-" : "";
      } else {
        s += t.c < 0 ? " - " : " + ";
      }
      s += buf;
      if (t.a > 0) s += "*x^" + std::to_string(t.a);
      if (t.b > 0) s += "*y^" + std::to_string(t.b);
    }
    return s.empty() ? "0" : s;
  }

  // Coefficients as they appear in text(), so the exact jet matches the parsed expression.
  double coefficient(const Monomial& t) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", t.c);
    return std::stod(buf);
  }

  Jet2 exact_jet(double x, double y) const {
    auto p = [](double v, int n) { return n < 0 ? 0.0 : std::pow(v, n); };
    Jet2 j;
    for (const auto& t : terms) {
      const double c = coefficient(t);
      const int a = t.a, b = t.b;
      j.g += c * p(x, a) * p(y, b);
      j.gx += c * a * p(x, a - 1) * p(y, b);
      j.gy += c * b * p(x, a) * p(y, b - 1);
      j.gxx += c * a * (a - 1) * p(x, a - 2) * p(y, b);
      j.gxy += c * a * b * p(x, a - 1) * p(y, b - 1);
      j.gyy += c * b * (b - 1) * p(x, a) * p(y, b - 2);
    }
    return j;
  }
};

inline Polynomial random_polynomial(Rng& rng, int max_terms = 5, int max_degree = 4) {
  Polynomial poly;
  const int n = rng.integer(1, max_terms);
  for (int i = 0; i < n; ++i) {
    poly.terms.push_back({rng.uniform(-2.0, 2.0), rng.integer(0, max_degree),
                          rng.integer(0, max_degree)});
  }
  return poly;
}

/// |a - b| within `rel` relative to max(1, |b|), or within `abs`.
inline bool close(double a, double b, double rel, double abs = 0.0) {
  const double d = std::abs(a - b);
  return d <= abs || d <= rel * std::max(1.0, std::abs(b));
}

}  // namespace viewcurve::testing
