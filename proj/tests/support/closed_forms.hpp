#pragma once
// Hand-expanded closed forms for the built-in example families: frame
// vectors, the full hypersurfaces at their default anchors, and the three
// projected slice surfaces. Written directly against <cmath> so they share
// no code with the library evaluation path.

#include <cmath>

#include "core/linalg4.hpp"

namespace isogeo4::testing {

struct Vec3d {
  double x = 0, y = 0, z = 0;
};

// ---------------------------------------------------------------------------
// example1: r(s) = (cos s / 2, sin s / 2, s/2, sqrt(2) s / 2)

inline Vec4 ex1_tangent(double s) {
  return {-0.5 * std::sin(s), 0.5 * std::cos(s), 0.5, std::sqrt(2.0) / 2};
}
inline Vec4 ex1_normal(double s) { return {-std::cos(s), -std::sin(s), 0, 0}; }
inline Vec4 ex1_binormal1(double s) {
  const double r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  return {-r3 / 2 * std::sin(s), r3 / 2 * std::cos(s), -r3 / 6, -r6 / 6};
}
inline Vec4 ex1_binormal2() {
  return {0, 0, std::sqrt(6.0) / 3, -std::sqrt(3.0) / 3};
}

// Displayed hypersurface at t0 = 1/2, q0 = 0.
inline Vec4 ex1_surface(double s, double t, double q) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  const double a = t - 0.5;
  return {0.5 * std::cos(s) - 0.5 * a * (q + r3) * std::sin(s),
          0.5 * std::sin(s) + 0.5 * a * (q + r3) * std::cos(s),
          0.5 * s + 0.5 * a * q - r3 / 6 * a + r6 / 3 * q,
          r2 / 2 * s + r2 / 2 * a * q - r6 / 6 * a - r3 / 3 * q};
}

// General-anchor form of the example1 hypersurface.
inline Vec4 ex1_surface_general(double s, double t, double q, double t0, double q0) {
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  const double a = t - t0, b = q - q0;
  return {0.5 * std::cos(s) - 0.5 * a * b * std::sin(s) - r3 / 2 * a * std::sin(s),
          0.5 * std::sin(s) + 0.5 * a * b * std::cos(s) + r3 / 2 * a * std::cos(s),
          0.5 * s + 0.5 * a * b - r3 / 6 * a + r6 / 3 * b,
          r2 / 2 * s + r2 / 2 * a * b - r6 / 6 * a - r3 / 3 * b};
}

// Slice q = 1/8 projected into w = 0. Both trigonometric coefficients carry
// (1 + 8 sqrt(3))/16; the doubled variant on the y term does not lie on the
// family (see ex1_slice_y_doubled).
inline Vec3d ex1_slice(double s, double t) {
  const double r3 = std::sqrt(3.0), r6 = std::sqrt(6.0);
  const double a = t - 0.5;
  const double c = (1 + 8 * r3) / 16;
  return {0.5 * std::cos(s) - c * a * std::sin(s), 0.5 * std::sin(s) + c * a * std::cos(s),
          0.5 * s + a / 16 - r3 / 6 * a + r6 / 24};
}

inline double ex1_slice_y_doubled(double s, double t) {
  const double c = (1 + 8 * std::sqrt(3.0)) / 8;
  return 0.5 * std::sin(s) + c * (t - 0.5) * std::cos(s);
}

// ---------------------------------------------------------------------------
// example2 and example3 share the curve (sin s / 2, cos s / 2, 0, sqrt(3) s / 2).

inline Vec4 ex23_tangent(double s) {
  return {0.5 * std::cos(s), -0.5 * std::sin(s), 0, std::sqrt(3.0) / 2};
}
inline Vec4 ex23_normal(double s) { return {-std::sin(s), -std::cos(s), 0, 0}; }
inline Vec4 ex23_binormal1(double s) {
  const double r3 = std::sqrt(3.0);
  return {r3 / 2 * std::cos(s), -r3 / 2 * std::sin(s), 0, -0.5};
}
inline Vec4 ex23_binormal2() { return {0, 0, -1, 0}; }

// General-anchor form of the example2 hypersurface.
inline Vec4 ex2_surface_general(double s, double t, double q, double t0, double q0) {
  const double r3 = std::sqrt(3.0);
  const double m = (s + t + 1) * (q - q0);
  return {0.5 * std::sin(s) + r3 / 2 * m * std::cos(s),
          0.5 * std::cos(s) - r3 / 2 * m * std::sin(s), -(s + 1) * (t - t0),
          r3 / 2 * s - 0.5 * m};
}

// General-anchor form of the example3 hypersurface.
inline Vec4 ex3_surface_general(double s, double t, double q, double t0, double q0) {
  const double r3 = std::sqrt(3.0);
  const double m = std::sin(s * (q - q0));
  return {0.5 * std::sin(s) + r3 / 2 * std::cos(s) * m,
          0.5 * std::cos(s) - r3 / 2 * std::sin(s) * m, -s * q * q * (t - t0),
          r3 / 2 * s - 0.5 * m};
}

// Displayed hypersurface at t0 = 1/2, q0 = 0.
inline Vec4 ex2_surface(double s, double t, double q) {
  const double r3 = std::sqrt(3.0);
  const double m = (s + t + 1) * q;
  return {0.5 * std::sin(s) + r3 / 2 * m * std::cos(s),
          0.5 * std::cos(s) - r3 / 2 * m * std::sin(s), -(s + 1) * (t - 0.5),
          r3 / 2 * s - 0.5 * m};
}

// Slice q = 1/500 projected into w = 0.
inline Vec3d ex2_slice(double s, double t) {
  const double r3 = std::sqrt(3.0);
  return {0.5 * std::sin(s) + r3 / 1000 * (s + t + 1) * std::cos(s),
          0.5 * std::cos(s) - r3 / 1000 * (s + t + 1) * std::sin(s), -(s + 1) * (t - 0.5)};
}

// Displayed hypersurface at t0 = 1, q0 = 1.
inline Vec4 ex3_surface(double s, double t, double q) {
  const double r3 = std::sqrt(3.0);
  const double m = std::sin(s * (q - 1));
  return {0.5 * std::sin(s) + r3 / 2 * std::cos(s) * m,
          0.5 * std::cos(s) - r3 / 2 * std::sin(s) * m, -s * q * q * (t - 1),
          r3 / 2 * s - 0.5 * m};
}

// Projection into z = 0; independent of t because only the deleted
// coordinate carries t.
inline Vec3d ex3_slice(double s, double q) {
  const double r3 = std::sqrt(3.0);
  const double m = std::sin(s * (q - 1));
  return {0.5 * std::sin(s) + r3 / 2 * std::cos(s) * m,
          0.5 * std::cos(s) - r3 / 2 * std::sin(s) * m, r3 / 2 * s - 0.5 * m};
}

}  // namespace isogeo4::testing
